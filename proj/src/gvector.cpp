#include "genform/gvector.hpp"

#include <stdexcept>

namespace genform {

namespace {

void check_same_n(int a, int b) {
  if (a != b) throw std::invalid_argument("chart dimension mismatch");
}

OrdForm coerce(int n, int degree, OrdForm f, const char* slot) {
  if (f.is_zero()) return OrdForm::zero(n, degree);
  if (f.degree() != degree)
    throw std::invalid_argument(std::string("generalized form ") + slot +
                                " slot has wrong degree");
  return f;
}

} // namespace

GenForm::GenForm(int degree, OrdForm first, OrdForm second)
    : degree_(degree),
      first_(coerce(first.n(), degree, std::move(first), "first")),
      second_(coerce(first_.n(), degree + 1, std::move(second), "second")) {
  check_same_n(first_.n(), second_.n());
}

GenForm GenForm::zero(int n, int degree) {
  return GenForm(degree, OrdForm::zero(n, degree), OrdForm::zero(n, degree + 1));
}

GenForm GenForm::scalar(Poly f) {
  int n = f.nvars();
  return GenForm(0, OrdForm::scalar(std::move(f)), OrdForm::zero(n, 1));
}

GenForm GenForm::unit(int n) { return scalar(Poly(n, 1)); }

GenForm GenForm::zeta(int n) {
  return GenForm(-1, OrdForm::zero(n, -1), OrdForm::scalar(Poly(n, 1)));
}

GenForm GenForm::operator-() const { return GenForm(degree_, -first_, -second_); }

GenForm& GenForm::operator+=(const GenForm& o) {
  check_same_n(n(), o.n());
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_)
    throw std::invalid_argument("cannot add generalized forms of different degree");
  first_ += o.first_;
  second_ += o.second_;
  return *this;
}

GenForm& GenForm::operator-=(const GenForm& o) { return *this += -o; }

GenForm operator*(const Rational& c, const GenForm& a) {
  return GenForm(a.degree_, c * a.first_, c * a.second_);
}

GenForm operator*(const Poly& f, const GenForm& a) {
  return GenForm(a.degree_, f * a.first_, f * a.second_);
}

bool GenForm::operator==(const GenForm& o) const {
  if (n() != o.n()) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && first_ == o.first_ && second_ == o.second_;
}

GenVec::GenVec(OrdVec v1, Poly v0) : v1_(std::move(v1)), v0_(std::move(v0)) {
  check_same_n(v1_.n(), v0_.nvars());
}

GenVec GenVec::zero(int n) { return GenVec(OrdVec(n), Poly(n)); }

GenVec GenVec::unit(int n) { return GenVec(OrdVec(n), Poly(n, 1)); }

GenVec GenVec::operator-() const { return GenVec(-v1_, -v0_); }

GenVec& GenVec::operator+=(const GenVec& o) {
  v1_ += o.v1_;
  v0_ += o.v0_;
  return *this;
}

GenVec& GenVec::operator-=(const GenVec& o) {
  v1_ -= o.v1_;
  v0_ -= o.v0_;
  return *this;
}

GenVec operator*(const Rational& c, const GenVec& v) {
  return GenVec(c * v.v1_, c * v.v0_);
}

int tau(int p) { return (p - 1) % 2 == 0 ? p : -p; }

GenForm gwedge(const GenForm& a, const GenForm& b) {
  check_same_n(a.n(), b.n());
  int p = a.degree();
  int q = b.degree();
  if (p + q < -1) return GenForm::zero(a.n(), p + q);
  int sign = q % 2 == 0 ? 1 : -1;
  return GenForm(p + q, wedge_ord(a.first(), b.first()),
                 wedge_ord(a.first(), b.second()) +
                     Rational(sign) * wedge_ord(a.second(), b.first()));
}

GenForm gd(const Chart& chart, const GenForm& a) {
  check_same_n(chart.n, a.n());
  int p = a.degree();
  Rational sign_k = (p + 1) % 2 == 0 ? chart.k : -chart.k;
  return GenForm(p + 1, d_ord(a.first()) + sign_k * a.second(),
                 d_ord(a.second()));
}

GenVec gscale(const GenForm& s, const GenVec& v) {
  check_same_n(s.n(), v.n());
  if (s.degree() != 0 && !s.is_zero())
    throw std::invalid_argument("generalized scalar must have degree 0");
  Poly a0 = s.first().is_zero() ? Poly(s.n()) : s.first().component({});
  OrdForm iva1 = contract_ord(v.v1(), s.second());
  Poly extra = iva1.is_zero() ? Poly(s.n()) : iva1.component({});
  return GenVec(a0 * v.v1(), a0 * v.v0() + extra);
}

GenForm gcontract(const GenVec& v, const GenForm& a) {
  check_same_n(v.n(), a.n());
  int p = a.degree();
  if (p <= -1) return GenForm::zero(a.n(), p - 1);
  return GenForm(p - 1, contract_ord(v.v1(), a.first()),
                 contract_ord(v.v1(), a.second()) +
                     Rational(tau(p)) * (v.v0() * a.first()));
}

GenForm glie_cartan(const Chart& chart, const GenVec& v, const GenForm& a) {
  GenForm composed =
      gcontract(v, gd(chart, a)) + gd(chart, gcontract(v, a));

  // closed component form, kept as an independent route
  int p = a.degree();
  Rational pk = Rational(p) * chart.k;
  Rational p1k = Rational(p + 1) * chart.k;
  OrdForm dv0 = d_ord(OrdForm::scalar(v.v0()));
  OrdForm first = lie_ord(v.v1(), a.first()) - pk * (v.v0() * a.first());
  OrdForm second = lie_ord(v.v1(), a.second()) - p1k * (v.v0() * a.second()) +
                   Rational(tau(p)) * wedge_ord(dv0, a.first()) +
                   Rational(p % 2 == 0 ? 1 : -1) *
                       (v.v0() * d_ord(a.first()));
  GenForm closed(p, std::move(first), std::move(second));

  if (!(composed == closed))
    throw std::logic_error("Cartan-formula Lie derivative disagrees with its "
                           "closed component form");
  return composed;
}

GenForm glie_hat(const Chart& chart, const GenVec& v, const GenForm& a) {
  int p = a.degree();
  Rational pk = Rational(p) * chart.k;
  Rational p1k = Rational(p + 1) * chart.k;
  return GenForm(p, lie_ord(v.v1(), a.first()) - pk * (v.v0() * a.first()),
                 lie_ord(v.v1(), a.second()) - p1k * (v.v0() * a.second()));
}

GenVec glie_hat_vec(const Chart& chart, const GenVec& v, const GenVec& w) {
  return GenVec(commutator_ord(v.v1(), w.v1()) + chart.k * (v.v0() * w.v1()),
                lie_ord_scalar(v.v1(), w.v0()));
}

GenVec gcommutator(const GenVec& v, const GenVec& w) {
  return GenVec(commutator_ord(v.v1(), w.v1()),
                lie_ord_scalar(v.v1(), w.v0()) - lie_ord_scalar(w.v1(), v.v0()));
}

std::string GenForm::to_string(const Chart& chart) const {
  return "gf(" + std::to_string(degree_) + "; " + first_.to_string(chart) +
         "; " + second_.to_string(chart) + ")";
}

std::string GenVec::to_string(const Chart& chart) const {
  return "gv(" + v1_.to_string(chart) + "; " + v0_.to_string(chart.coords) + ")";
}

} // namespace genform
