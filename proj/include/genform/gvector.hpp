#pragma once

#include "genform/exterior.hpp"

namespace genform {

// Generalized p-form, -1 <= p <= n: an ordered pair of an ordinary p-form
// and an ordinary (p+1)-form. Degrees outside [-1, n] exist only as the
// canonical zero object; all zero generalized forms compare equal.
class GenForm {
public:
  GenForm(int degree, OrdForm first, OrdForm second);

  static GenForm zero(int n, int degree);
  static GenForm scalar(Poly f);          // (f, 0) at degree 0
  static GenForm unit(int n);             // (1, 0) at degree 0
  static GenForm zeta(int n);             // (0, 1) at degree -1

  int n() const { return first_.n(); }
  int degree() const { return degree_; }
  bool is_zero() const { return first_.is_zero() && second_.is_zero(); }
  const OrdForm& first() const { return first_; }
  const OrdForm& second() const { return second_; }

  GenForm operator-() const;
  GenForm& operator+=(const GenForm& o);
  GenForm& operator-=(const GenForm& o);
  friend GenForm operator+(GenForm a, const GenForm& b) { return a += b; }
  friend GenForm operator-(GenForm a, const GenForm& b) { return a -= b; }
  friend GenForm operator*(const Rational& c, const GenForm& a);
  friend GenForm operator*(const Poly& f, const GenForm& a);

  bool operator==(const GenForm& o) const;

  std::string to_string(const Chart& chart) const;

private:
  int degree_;
  OrdForm first_;  // degree p
  OrdForm second_; // degree p+1
};

// Generalized vector field: pair of an ordinary vector field and a scalar.
class GenVec {
public:
  GenVec(OrdVec v1, Poly v0);

  static GenVec zero(int n);
  static GenVec unit(int n); // (0, 1), the unit generalized vector

  int n() const { return v1_.n(); }
  const OrdVec& v1() const { return v1_; }
  const Poly& v0() const { return v0_; }
  bool is_zero() const { return v1_.is_zero() && v0_.is_zero(); }

  GenVec operator-() const;
  GenVec& operator+=(const GenVec& o);
  GenVec& operator-=(const GenVec& o);
  friend GenVec operator+(GenVec a, const GenVec& b) { return a += b; }
  friend GenVec operator-(GenVec a, const GenVec& b) { return a -= b; }
  friend GenVec operator*(const Rational& c, const GenVec& v);

  bool operator==(const GenVec& o) const = default;

  std::string to_string(const Chart& chart) const;

private:
  OrdVec v1_;
  Poly v0_;
};

// Sign factor tau(p) = p(-1)^(p-1) of the contraction formula.
int tau(int p);

// (alpha_p beta_q, alpha_p beta_{q+1} + (-1)^q alpha_{p+1} beta_q)
GenForm gwedge(const GenForm& a, const GenForm& b);

// (d alpha_p + (-1)^(p+1) k alpha_{p+1}, d alpha_{p+1})
GenForm gd(const Chart& chart, const GenForm& a);

// Generalized scalar multiplication: (a0 v1, a0 v0 + i_{v1} a1).
GenVec gscale(const GenForm& s, const GenVec& v);

// (i_{v1} alpha_p, i_{v1} alpha_{p+1} + tau(p) v0 alpha_p)
GenForm gcontract(const GenVec& v, const GenForm& a);

// Cartan-formula Lie derivative I_V d + d I_V, cross-checked against the
// closed component form; disagreement throws std::logic_error.
GenForm glie_cartan(const Chart& chart, const GenVec& v, const GenForm& a);

// Corrected Lie derivative:
// (L_{v1} alpha_p - p k v0 alpha_p, L_{v1} alpha_{p+1} - (p+1) k v0 alpha_{p+1})
GenForm glie_hat(const Chart& chart, const GenVec& v, const GenForm& a);

// Corrected Lie derivative of a generalized vector:
// ([v1, w1] + k v0 w1, L_{v1} w0)
GenVec glie_hat_vec(const Chart& chart, const GenVec& v, const GenVec& w);

// Generalized commutator {V, W} = ([v1, w1], L_{v1} w0 - L_{w1} v0).
GenVec gcommutator(const GenVec& v, const GenVec& w);

} // namespace genform
