#include "genform/random_gen.hpp"

namespace genform {

namespace {

// combinations of {0..n-1} of size p, lexicographic
std::vector<MultiIndex> all_multi_indices(int n, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  MultiIndex cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace

InstanceGen::InstanceGen(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{master_seed, trial};
  rng_.seed(seq);
}

std::uint64_t InstanceGen::bits() { return rng_(); }

int InstanceGen::uniform(int lo, int hi) {
  // modulo bias is irrelevant for instance generation
  return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational InstanceGen::coeff() {
  return Rational(uniform(-9, 9), uniform(1, 3));
}

Poly InstanceGen::poly(int nvars, int max_degree, int max_terms) {
  Poly out(nvars);
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int deg = uniform(0, max_degree);
    Exponents e(nvars, 0);
    for (int d = 0; d < deg; ++d) e[uniform(0, nvars - 1)] += 1;
    out.add_term(e, coeff());
  }
  return out;
}

OrdForm InstanceGen::ordform(int n, int degree, int max_degree, int max_terms) {
  OrdForm out(n, degree);
  for (const MultiIndex& idx : all_multi_indices(n, degree))
    if (uniform(0, 1) == 1) out.add_term(idx, poly(n, max_degree, max_terms));
  return out;
}

OrdVec InstanceGen::ordvec(int n, int max_degree, int max_terms) {
  OrdVec out(n);
  for (int i = 0; i < n; ++i)
    if (uniform(0, 1) == 1) out.set_component(i, poly(n, max_degree, max_terms));
  return out;
}

GenForm InstanceGen::genform(int n, int degree, int max_degree, int max_terms) {
  return GenForm(degree, ordform(n, degree, max_degree, max_terms),
                 ordform(n, degree + 1, max_degree, max_terms));
}

GenVec InstanceGen::genvec(int n, int max_degree, int max_terms) {
  return GenVec(ordvec(n, max_degree, max_terms), poly(n, max_degree, max_terms));
}

} // namespace genform
