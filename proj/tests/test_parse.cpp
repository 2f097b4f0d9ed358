#include "doctest.h"

#include "genform/parse.hpp"
#include "genform/random_gen.hpp"

using namespace genform;

namespace {

const Chart c2 = Chart::standard(2);
const Chart c3 = Chart::standard(3);

Value E(const std::string& s, const Chart& c = c2) {
  return eval(parse(s, c), c);
}

} // namespace

TEST_CASE("literal parsing") {
  AstPtr a = parse("d(gf(0; x1; 0))", c2);
  CHECK(a->kind == AstKind::GD);
  CHECK(a->args[0]->kind == AstKind::GenFormLit);

  AstPtr b = parse("I(gv([1*e1]; x2), gf(1; [1*dx1]; [1*dx1^dx2]))", c2);
  CHECK(b->kind == AstKind::Contract);
  CHECK(b->value_kind == ValueKind::Form);

  CHECK_THROWS_AS(parse("gf(0; x1)", c2), ParseError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("gf(0; x1; 0", c2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 1);
    CHECK(e.span().col == 12);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("gf(0; y7; 0)", c2), ParseError);
  CHECK_THROWS_AS(parse("", c2), ParseError);
}

TEST_CASE("type errors are caught at parse time") {
  // Lhat expects (vector, form)
  CHECK_THROWS_AS(parse("Lhat(gf(0;1;0), gf(0;1;0))", c2), ParseError);
  CHECK_THROWS_AS(parse("d(gv([1*e1]; 0))", c2), ParseError);
  CHECK_THROWS_AS(parse("gf(0;1;0) ^ gv([1*e1]; 0)", c2), ParseError);
}

TEST_CASE("degree errors are caught at evaluation") {
  AstPtr a = parse("scale(gf(1; [1*dx1]; 0), gv([1*e1]; 0))", c2);
  CHECK_THROWS_AS(eval(a, c2), ParseError);
}

TEST_CASE("evaluation matches the operation semantics") {
  CHECK(std::get<GenForm>(E("gf(0;1;0) ^ gf(1; [x1*dx2]; 0)")) ==
        std::get<GenForm>(E("gf(1; [x1*dx2]; 0)")));
  CHECK(std::get<GenForm>(E("d(d(gf(0; x1*x2; [x1*dx2])))")).is_zero());
  CHECK(std::get<GenVec>(E("comm(gv([x1*e1]; x2), gv([1*e2]; x1))")) ==
        std::get<GenVec>(E("gv(0; x1 - 1)")));
}

TEST_CASE("evaluation is deterministic") {
  const std::string src = "L(gv([x1*e1 + 1*e2]; x2), gf(1; [x2*dx1]; [1*dx1^dx2]))";
  CHECK(to_string(E(src), c2) == to_string(E(src), c2));
}

TEST_CASE("round-trip on evaluator outputs") {
  std::vector<std::string> sources = {
      "gf(-1; 0; x1 + 1/2)",
      "gf(2; [x1*dx1^dx2]; 0)",
      "I(gv([1*e1 + x2*e2]; x1), gf(2; [x1*dx1^dx2]; 0))",
      "Lhatv(gv([1*e1]; x1), gv([x1*e2]; x2))",
      "scale(gf(0; x1; [2*dx2]), gv([1*e1]; 0))",
  };
  for (const auto& src : sources) {
    Value v = E(src);
    std::string text = to_string(v, c2);
    CHECK(to_string(E(text), c2) == text);
  }
}

TEST_CASE("random round-trips across degrees") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    InstanceGen gen(55, trial);
    for (int p = -1; p <= 3; ++p) {
      GenForm a = gen.genform(3, p, 2, 2);
      std::string text = a.to_string(c3);
      CHECK(std::get<GenForm>(E(text, c3)) == a);
    }
    GenVec v = gen.genvec(3, 2, 2);
    std::string text = v.to_string(c3);
    CHECK(std::get<GenVec>(E(text, c3)) == v);
  }
}
