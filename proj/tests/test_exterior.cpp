#include "doctest.h"

#include "genform/exterior.hpp"
#include "genform/parse.hpp"
#include "genform/random_gen.hpp"

using namespace genform;

namespace {

const Chart c3 = Chart::standard(3);

OrdForm F(const std::string& s, int degree, const Chart& c = c3) {
  return parse_ordform(s, c, degree);
}
OrdVec V(const std::string& s, const Chart& c = c3) { return parse_ordvec(s, c); }

// independent oracle: L_v(f dx_I) = (v^j d_j f) dx_I + sum_l f dx_I with
// dx_{i_l} replaced by dv^{i_l}
OrdForm naive_lie(const OrdVec& v, const OrdForm& a) {
  OrdForm out(a.n(), a.degree());
  for (const auto& [idx, f] : a.components()) {
    out.add_term(idx, lie_ord_scalar(v, f));
    for (std::size_t l = 0; l < idx.size(); ++l)
      for (int j = 0; j < a.n(); ++j) {
        Poly dv = v.component(idx[l]).partial(j);
        if (dv.is_zero()) continue;
        MultiIndex replaced = idx;
        replaced[l] = j;
        out.add_term(std::move(replaced), f * dv);
      }
  }
  return out;
}

} // namespace

TEST_CASE("multi-index sorting sign") {
  MultiIndex a{2, 0, 1};
  CHECK(sort_multi_index(a) == 1);
  CHECK(a == MultiIndex{0, 1, 2});
  MultiIndex b{1, 0};
  CHECK(sort_multi_index(b) == -1);
  MultiIndex c{0, 1, 0};
  CHECK(sort_multi_index(c) == 0);
}

TEST_CASE("ordinary wedge") {
  OrdForm dx1 = F("[1*dx1]", 1);
  OrdForm dx2 = F("[1*dx2]", 1);
  CHECK(wedge_ord(dx1, dx2) == F("[1*dx1^dx2]", 2));
  CHECK(wedge_ord(dx2, dx1) == F("[-1*dx1^dx2]", 2));
  CHECK(wedge_ord(F("[x2*dx1]", 1), dx1) == OrdForm::zero(3, 2));
  CHECK(wedge_ord(dx1, F("[x1*dx2^dx3]", 2)) == F("[x1*dx1^dx2^dx3]", 3));
}

TEST_CASE("exterior derivative") {
  CHECK(d_ord(F("x1*x2", 0)) == F("[x2*dx1 + x1*dx2]", 1));
  CHECK(d_ord(F("[x2*dx1]", 1)) == F("[-1*dx1^dx2]", 2));
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    InstanceGen gen(5, trial);
    for (int p = 0; p <= 3; ++p) {
      OrdForm a = gen.ordform(3, p, 2, 2);
      CHECK(d_ord(d_ord(a)) == OrdForm::zero(3, p + 2));
    }
  }
}

TEST_CASE("contraction") {
  CHECK(contract_ord(V("[1*e1]"), F("[1*dx1]", 1)) == F("1", 0));
  CHECK(contract_ord(V("[1*e1]"), F("[1*dx1^dx2]", 2)) == F("[1*dx2]", 1));
  CHECK(contract_ord(V("[1*e2]"), F("[1*dx1^dx2]", 2)) == F("[-1*dx1]", 1));
  CHECK(contract_ord(V("[x1*e1 + 1*e2]"), F("x1*x2", 0)) ==
        OrdForm::zero(3, -1));
}

TEST_CASE("ordinary Lie derivative") {
  CHECK(lie_ord(V("[1*e1]"), F("[x1*dx2]", 1)) == F("[1*dx2]", 1));
  CHECK(lie_ord(V("[x1*e1]"), F("[1*dx1]", 1)) == F("[1*dx1]", 1));
  OrdVec v = V("[x2*e1 + x1*x3*e3]");
  OrdForm f = F("x1^2*x3", 0);
  CHECK(lie_ord(v, f) ==
        OrdForm::scalar(lie_ord_scalar(v, f.component({}))));
}

TEST_CASE("Cartan formula agrees with naive expansion") {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    InstanceGen gen(99, trial);
    OrdVec v = gen.ordvec(3, 2, 2);
    for (int p = 0; p <= 2; ++p) {
      OrdForm a = gen.ordform(3, p, 2, 2);
      CHECK(lie_ord(v, a) == naive_lie(v, a));
    }
  }
}

TEST_CASE("vector commutator") {
  CHECK(commutator_ord(V("[1*e1]"), V("[1*e2]")) == OrdVec(3));
  CHECK(commutator_ord(V("[x1*e1]"), V("[1*e1]")) == V("[-1*e1]"));
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    InstanceGen gen(13, trial);
    OrdVec v = gen.ordvec(3, 2, 2);
    OrdVec w = gen.ordvec(3, 2, 2);
    CHECK(commutator_ord(v, v) == OrdVec(3));
    for (int p = 0; p <= 3; ++p) {
      OrdForm a = gen.ordform(3, p, 2, 2);
      CHECK(lie_ord(v, lie_ord(w, a)) - lie_ord(w, lie_ord(v, a)) ==
            lie_ord(commutator_ord(v, w), a));
    }
  }
}

TEST_CASE("scalar Lie derivative") {
  CHECK(lie_ord_scalar(V("[1*e1]"), parse_poly("x1", c3)) ==
        parse_poly("1", c3));
  CHECK(lie_ord_scalar(V("[x1*e1]"), parse_poly("x1^2", c3)) ==
        parse_poly("2*x1^2", c3));
  CHECK(lie_ord_scalar(V("[x1*e1 + x3*e2]"), parse_poly("5/3", c3)) == Poly(3));
}

TEST_CASE("graded anticommutativity and Leibniz") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    InstanceGen gen(21, trial);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        OrdForm a = gen.ordform(3, p, 2, 2);
        OrdForm b = gen.ordform(3, q, 2, 2);
        int sign = (p * q) % 2 == 0 ? 1 : -1;
        CHECK(wedge_ord(a, b) == Rational(sign) * wedge_ord(b, a));
        int ps = p % 2 == 0 ? 1 : -1;
        CHECK(d_ord(wedge_ord(a, b)) ==
              wedge_ord(d_ord(a), b) + Rational(ps) * wedge_ord(a, d_ord(b)));
      }
  }
}

TEST_CASE("degree overflow collapses to the zero object") {
  OrdForm top = F("[x1*dx1^dx2^dx3]", 3);
  CHECK(d_ord(top) == OrdForm::zero(3, 4));
  CHECK(wedge_ord(top, F("[1*dx1]", 1)).is_zero());
  CHECK(OrdForm::zero(3, 4) == OrdForm::zero(3, -1));
}
