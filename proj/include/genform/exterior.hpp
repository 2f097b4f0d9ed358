#pragma once

#include "genform/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace genform {

// Coordinate chart: dimension, the nonvanishing structure constant k,
// and coordinate names used by the parser and printer.
struct Chart {
  int n = 0;
  Rational k = 1;
  std::vector<std::string> coords;

  static Chart standard(int n, Rational k = 1); // x1..xn
  bool operator==(const Chart& o) const = default;
};

// Strictly increasing tuple of 0-based coordinate indices.
using MultiIndex = std::vector<int>;

// Sorts idx in place, returns the permutation sign, or 0 on a repeated index.
int sort_multi_index(MultiIndex& idx);

// Ordinary p-form. Any degree outside [0, n] is the canonical zero object:
// such forms carry no components, and all zero forms compare equal.
class OrdForm {
public:
  using ComponentMap = std::map<MultiIndex, Poly>;

  OrdForm(int n, int degree);
  static OrdForm zero(int n, int degree) { return OrdForm(n, degree); }
  static OrdForm scalar(Poly f); // degree 0
  static OrdForm basis(int n, MultiIndex idx, Poly coeff);

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return components_.empty(); }
  const ComponentMap& components() const { return components_; }
  const Poly& component(const MultiIndex& idx) const;

  // Re-sorts idx with parity sign before storing; drops cancellations.
  void add_term(MultiIndex idx, const Poly& coeff);

  OrdForm operator-() const;
  OrdForm& operator+=(const OrdForm& o);
  OrdForm& operator-=(const OrdForm& o);
  friend OrdForm operator+(OrdForm a, const OrdForm& b) { return a += b; }
  friend OrdForm operator-(OrdForm a, const OrdForm& b) { return a -= b; }
  friend OrdForm operator*(const Poly& f, const OrdForm& a);
  friend OrdForm operator*(const Rational& c, const OrdForm& a);

  bool operator==(const OrdForm& o) const;

  std::string to_string(const Chart& chart) const;

private:
  int n_;
  int degree_;
  ComponentMap components_;
};

// Ordinary vector field, v = sum_i v^i d/dx^i.
class OrdVec {
public:
  explicit OrdVec(int n);
  explicit OrdVec(std::vector<Poly> components);
  static OrdVec basis(int n, int index); // d/dx_index

  int n() const { return static_cast<int>(components_.size()); }
  bool is_zero() const;
  const Poly& component(int i) const { return components_[i]; }
  const std::vector<Poly>& components() const { return components_; }
  void set_component(int i, Poly p) { components_[i] = std::move(p); }

  OrdVec operator-() const;
  OrdVec& operator+=(const OrdVec& o);
  OrdVec& operator-=(const OrdVec& o);
  friend OrdVec operator+(OrdVec a, const OrdVec& b) { return a += b; }
  friend OrdVec operator-(OrdVec a, const OrdVec& b) { return a -= b; }
  friend OrdVec operator*(const Poly& f, const OrdVec& v);
  friend OrdVec operator*(const Rational& c, const OrdVec& v);

  bool operator==(const OrdVec& o) const = default;

  std::string to_string(const Chart& chart) const;

private:
  std::vector<Poly> components_;
};

OrdForm wedge_ord(const OrdForm& a, const OrdForm& b);
OrdForm d_ord(const OrdForm& a);
OrdForm contract_ord(const OrdVec& v, const OrdForm& a);
OrdForm lie_ord(const OrdVec& v, const OrdForm& a); // i_v d + d i_v
OrdVec commutator_ord(const OrdVec& v, const OrdVec& w);
Poly lie_ord_scalar(const OrdVec& v, const Poly& f);

} // namespace genform
