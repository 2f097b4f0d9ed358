#include "doctest.h"

#include "genform/parse.hpp"
#include "genform/poly.hpp"
#include "genform/random_gen.hpp"

using namespace genform;

namespace {
const Chart chart2 = Chart::standard(2);
const Chart chart3 = Chart::standard(3);

Poly P(const std::string& s, const Chart& c = chart2) { return parse_poly(s, c); }
} // namespace

TEST_CASE("poly addition") {
  CHECK(P("x1") + P("-x1") == Poly(2));
  CHECK(P("x1 + 1") + P("x2") == P("x1 + x2 + 1"));
  CHECK(P("1/2*x1^2") + P("1/2*x1^2") == P("x1^2"));
  CHECK_THROWS_AS(P("x1") + P("x1", chart3), std::invalid_argument);
}

TEST_CASE("poly multiplication") {
  Poly p = P("3*x1^2*x2 - 1/3*x2 + 2");
  CHECK(Poly(2, 1) * p == p);
  CHECK(Poly(2) * p == Poly(2));
  CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
  CHECK_THROWS_AS(P("x1") * P("x1", chart3), std::invalid_argument);
}

TEST_CASE("poly partial derivative") {
  CHECK(P("x1^2*x2").partial(0) == P("2*x1*x2"));
  CHECK(P("7/2").partial(1) == Poly(2));
  CHECK(P("x2").partial(0) == Poly(2));
  CHECK_THROWS_AS(P("x1").partial(2), std::out_of_range);
}

TEST_CASE("poly evaluation") {
  std::vector<Rational> pt{1, 2};
  CHECK(P("x1 + x2").eval(pt) == 3);
  CHECK(P("x1^2*x2 - 5").eval(std::vector<Rational>{0, 0}) == -5);
  CHECK(P("x1^2").eval(std::vector<Rational>{Rational(3, 2), 0}) ==
        Rational(9, 4));
  CHECK_THROWS_AS(P("x1").eval(std::vector<Rational>{1}),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random instances") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    InstanceGen gen(12345, trial);
    Poly a = gen.poly(3, 3, 3);
    Poly b = gen.poly(3, 3, 3);
    Poly c = gen.poly(3, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partials commute and satisfy Leibniz") {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    InstanceGen gen(777, trial);
    Poly a = gen.poly(3, 4, 3);
    Poly b = gen.poly(3, 4, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j)
        CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
      CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
    }
  }
}

TEST_CASE("canonical serialization round-trips") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    InstanceGen gen(31, trial);
    Poly a = gen.poly(3, 3, 4);
    CHECK(parse_poly(a.to_string(chart3.coords), chart3) == a);
  }
  CHECK(Poly(2).to_string(chart2.coords) == "0");
  CHECK(P("-1/2*x2 + 3*x1^2*x2").to_string(chart2.coords) ==
        "3*x1^2*x2 - 1/2*x2");
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
