#pragma once

#include "genform/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace genform {

// Exponent vector of a monomial; length equals the number of chart coordinates.
using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over the rationals. Immutable value type:
// no stored coefficient is zero, all exponent vectors have length nvars.
class Poly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, Rational constant);

  static Poly variable(int nvars, int index); // x_index, 0-based
  static Poly monomial(Exponents exps, Rational coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  Rational constant_term() const;
  int total_degree() const; // -1 for the zero polynomial

  Poly partial(int index) const; // d/dx_index, 0-based
  Rational eval(std::span<const Rational> point) const;
  Poly pow(int e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  bool operator==(const Poly& o) const = default;

  // Canonical text: graded-lex descending terms, reduced coefficients.
  std::string to_string(std::span<const std::string> names) const;

  // Accumulates c into the monomial e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

private:
  int nvars_;
  TermMap terms_;
};

} // namespace genform
