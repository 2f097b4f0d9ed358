#include "genform/exterior.hpp"

#include <stdexcept>

namespace genform {

namespace {

void check_same_n(int a, int b) {
  if (a != b) throw std::invalid_argument("chart dimension mismatch");
}

bool in_range(int degree, int n) { return degree >= 0 && degree <= n; }

} // namespace

Chart Chart::standard(int n, Rational k) {
  if (n < 1) throw std::invalid_argument("chart dimension must be positive");
  if (k == 0) throw std::invalid_argument("structure constant k must be nonzero");
  Chart c;
  c.n = n;
  c.k = std::move(k);
  for (int i = 1; i <= n; ++i) c.coords.push_back("x" + std::to_string(i));
  return c;
}

int sort_multi_index(MultiIndex& idx) {
  int sign = 1;
  // insertion sort, flipping sign per swap
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      sign = -sign;
      --j;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

OrdForm::OrdForm(int n, int degree) : n_(n), degree_(degree) {}

OrdForm OrdForm::scalar(Poly f) {
  OrdForm out(f.nvars(), 0);
  if (!f.is_zero()) out.components_.emplace(MultiIndex{}, std::move(f));
  return out;
}

OrdForm OrdForm::basis(int n, MultiIndex idx, Poly coeff) {
  OrdForm out(n, static_cast<int>(idx.size()));
  out.add_term(std::move(idx), coeff);
  return out;
}

const Poly& OrdForm::component(const MultiIndex& idx) const {
  thread_local Poly zero(0);
  auto it = components_.find(idx);
  if (it != components_.end()) return it->second;
  zero = Poly(n_);
  return zero;
}

void OrdForm::add_term(MultiIndex idx, const Poly& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(idx.size()) != degree_ || !in_range(degree_, n_)) {
    if (!in_range(degree_, n_)) return; // canonical zero object
    throw std::invalid_argument("multi-index length does not match form degree");
  }
  for (int i : idx)
    if (i < 0 || i >= n_) throw std::out_of_range("multi-index out of range");
  int sign = sort_multi_index(idx);
  if (sign == 0) return;
  Poly signed_coeff = sign == 1 ? coeff : -coeff;
  auto [it, inserted] = components_.emplace(std::move(idx), std::move(signed_coeff));
  if (!inserted) {
    it->second += sign == 1 ? coeff : -coeff;
    if (it->second.is_zero()) components_.erase(it);
  }
}

OrdForm OrdForm::operator-() const {
  OrdForm out(n_, degree_);
  for (const auto& [idx, c] : components_) out.components_.emplace(idx, -c);
  return out;
}

OrdForm& OrdForm::operator+=(const OrdForm& o) {
  check_same_n(n_, o.n_);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_)
    throw std::invalid_argument("cannot add forms of different degree");
  for (const auto& [idx, c] : o.components_) {
    auto [it, inserted] = components_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }
  return *this;
}

OrdForm& OrdForm::operator-=(const OrdForm& o) { return *this += -o; }

OrdForm operator*(const Poly& f, const OrdForm& a) {
  OrdForm out(a.n_, a.degree_);
  if (f.is_zero()) return out;
  for (const auto& [idx, c] : a.components_) {
    Poly prod = f * c;
    if (!prod.is_zero()) out.components_.emplace(idx, std::move(prod));
  }
  return out;
}

OrdForm operator*(const Rational& c, const OrdForm& a) {
  return Poly(a.n(), c) * a;
}

bool OrdForm::operator==(const OrdForm& o) const {
  if (n_ != o.n_) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && components_ == o.components_;
}

OrdVec::OrdVec(int n) : components_(n, Poly(n)) {}

OrdVec::OrdVec(std::vector<Poly> components) : components_(std::move(components)) {
  for (const Poly& p : components_) check_same_n(p.nvars(), n());
}

OrdVec OrdVec::basis(int n, int index) {
  OrdVec v(n);
  v.components_[index] = Poly(n, 1);
  return v;
}

bool OrdVec::is_zero() const {
  for (const Poly& p : components_)
    if (!p.is_zero()) return false;
  return true;
}

OrdVec OrdVec::operator-() const {
  OrdVec out(n());
  for (int i = 0; i < n(); ++i) out.components_[i] = -components_[i];
  return out;
}

OrdVec& OrdVec::operator+=(const OrdVec& o) {
  check_same_n(n(), o.n());
  for (int i = 0; i < n(); ++i) components_[i] += o.components_[i];
  return *this;
}

OrdVec& OrdVec::operator-=(const OrdVec& o) { return *this += -o; }

OrdVec operator*(const Poly& f, const OrdVec& v) {
  OrdVec out(v.n());
  for (int i = 0; i < v.n(); ++i) out.components_[i] = f * v.components_[i];
  return out;
}

OrdVec operator*(const Rational& c, const OrdVec& v) {
  return Poly(v.n(), c) * v;
}

OrdForm wedge_ord(const OrdForm& a, const OrdForm& b) {
  check_same_n(a.n(), b.n());
  OrdForm out(a.n(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.components())
    for (const auto& [ib, cb] : b.components()) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

OrdForm d_ord(const OrdForm& a) {
  OrdForm out(a.n(), a.degree() + 1);
  for (const auto& [idx, c] : a.components())
    for (int i = 0; i < a.n(); ++i) {
      Poly dc = c.partial(i);
      if (dc.is_zero()) continue;
      MultiIndex di;
      di.reserve(idx.size() + 1);
      di.push_back(i);
      di.insert(di.end(), idx.begin(), idx.end());
      out.add_term(std::move(di), dc);
    }
  return out;
}

OrdForm contract_ord(const OrdVec& v, const OrdForm& a) {
  check_same_n(v.n(), a.n());
  OrdForm out(a.n(), a.degree() - 1);
  for (const auto& [idx, c] : a.components())
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Poly& vj = v.component(idx[j]);
      if (vj.is_zero()) continue;
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t l = 0; l < idx.size(); ++l)
        if (l != j) rest.push_back(idx[l]);
      Poly term = vj * c;
      out.add_term(std::move(rest), j % 2 == 0 ? term : -term);
    }
  return out;
}

OrdForm lie_ord(const OrdVec& v, const OrdForm& a) {
  return contract_ord(v, d_ord(a)) + d_ord(contract_ord(v, a));
}

OrdVec commutator_ord(const OrdVec& v, const OrdVec& w) {
  check_same_n(v.n(), w.n());
  OrdVec out(v.n());
  for (int i = 0; i < v.n(); ++i) {
    Poly c(v.n());
    for (int j = 0; j < v.n(); ++j)
      c += v.component(j) * w.component(i).partial(j) -
           w.component(j) * v.component(i).partial(j);
    out.set_component(i, std::move(c));
  }
  return out;
}

Poly lie_ord_scalar(const OrdVec& v, const Poly& f) {
  check_same_n(v.n(), f.nvars());
  Poly out(f.nvars());
  for (int i = 0; i < v.n(); ++i) out += v.component(i) * f.partial(i);
  return out;
}

std::string OrdVec::to_string(const Chart& chart) const {
  if (is_zero()) return "0";
  std::string out = "[";
  bool head = true;
  for (int i = 0; i < n(); ++i) {
    if (components_[i].is_zero()) continue;
    if (!head) out += " + ";
    head = false;
    std::string c = components_[i].to_string(chart.coords);
    bool simple = components_[i].terms().size() == 1 && c[0] != '-';
    out += (simple ? c : "(" + c + ")") + "*e" + std::to_string(i + 1);
  }
  return out + "]";
}

std::string OrdForm::to_string(const Chart& chart) const {
  if (is_zero()) return "0";
  if (degree_ == 0) return components_.begin()->second.to_string(chart.coords);
  std::string out = "[";
  bool head = true;
  for (const auto& [idx, c] : components_) {
    if (!head) out += " + ";
    head = false;
    std::string cs = c.to_string(chart.coords);
    bool simple = c.terms().size() == 1 && cs[0] != '-';
    out += (simple ? cs : "(" + cs + ")") + "*";
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j > 0) out += "^";
      out += "d" + chart.coords[idx[j]];
    }
  }
  return out + "]";
}

} // namespace genform
