#include "genform/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genform {

namespace {

void check_same_nvars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial chart dimension mismatch");
}

} // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(int nvars, Rational constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Exponents(nvars, 0), std::move(constant));
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Poly Poly::monomial(Exponents exps, Rational coeff) {
  Poly p(static_cast<int>(exps.size()));
  if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && constant_term() == 1;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::partial(int index) const {
  if (index < 0 || index >= nvars_)
    throw std::out_of_range("partial derivative index out of range");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents de = e;
    de[index] -= 1;
    out.add_term(de, c * e[index]);
  }
  return out;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    sum += term;
  }
  return sum;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly out(nvars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_nvars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_nvars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_nvars(a, b);
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out(p.nvars_);
  if (c == 0) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest graded-lex monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += genform::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += genform::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

} // namespace genform
