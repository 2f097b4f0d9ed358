#pragma once

#include "genform/gvector.hpp"

#include <cstdint>
#include <random>

namespace genform {

// Deterministic instance generator; the stream depends only on
// (master seed, trial index), so trials can run in any order.
class InstanceGen {
public:
  InstanceGen(std::uint64_t master_seed, std::uint64_t trial);

  std::uint64_t bits();
  int uniform(int lo, int hi); // inclusive

  // numerator in [-9, 9], denominator in {1, 2, 3}
  Rational coeff();
  Poly poly(int nvars, int max_degree, int max_terms);
  OrdForm ordform(int n, int degree, int max_degree, int max_terms);
  OrdVec ordvec(int n, int max_degree, int max_terms);
  GenForm genform(int n, int degree, int max_degree, int max_terms);
  GenVec genvec(int n, int max_degree, int max_terms);

private:
  std::mt19937_64 rng_;
};

} // namespace genform
