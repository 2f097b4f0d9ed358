#include "doctest.h"

#include "genform/mechanics.hpp"
#include "genform/parse.hpp"
#include "genform/random_gen.hpp"

using namespace genform;

namespace {

Chart mech_chart(int m) {
  Chart c;
  c.n = 2 * m + 1;
  c.k = 1;
  c.coords.push_back("t");
  for (int i = 1; i <= m; ++i) c.coords.push_back("q" + std::to_string(i));
  for (int i = 1; i <= m; ++i) c.coords.push_back("p" + std::to_string(i));
  return c;
}

ExtendedChart EC(const std::string& h0, int m = 1) {
  Chart c = mech_chart(m);
  return ExtendedChart::make(m, parse_poly(h0, c));
}

} // namespace

TEST_CASE("presymplectic data") {
  Chart c = mech_chart(1);
  ExtendedChart free = EC("0");
  PresymplecticData d0 = build_presymplectic(free);
  CHECK(d0.theta == parse_ordform("[p1*dq1]", c, 1));
  CHECK(d0.omega == parse_ordform("[-1*dq1^dp1]", c, 2));

  PresymplecticData d1 = build_presymplectic(EC("1/2*p1^2"));
  CHECK(d1.theta == parse_ordform("[-1/2*p1^2*dt + p1*dq1]", c, 1));
  CHECK(d1.omega ==
        parse_ordform("[p1*dt^dp1 + (-1)*dq1^dp1]", c, 2));

  PresymplecticData d2 = build_presymplectic(EC("1/2*p1^2 + 1/2*q1^2"));
  CHECK(d2.omega ==
        parse_ordform("[q1*dt^dq1 + p1*dt^dp1 + (-1)*dq1^dp1]", c, 2));
  CHECK(d_ord(d2.omega).is_zero());
  CHECK(d2.Omega.first() == d2.omega);
  CHECK(d2.Omega.second() == wedge_ord(d2.omega, d2.theta));
}

TEST_CASE("Hamiltonian vector field") {
  Chart c = mech_chart(1);
  CHECK(hamiltonian_vector(EC("0")) == parse_ordvec("[1*e1]", c));
  CHECK(hamiltonian_vector(EC("1/2*p1^2")) ==
        parse_ordvec("[1*e1 + p1*e2]", c));
  CHECK(hamiltonian_vector(EC("1/2*p1^2 + 1/2*q1^2")) ==
        parse_ordvec("[1*e1 + p1*e2 - q1*e3]", c));
}

TEST_CASE("v0 solves the constraint equation") {
  auto v0_of = [](const std::string& h0) {
    ExtendedChart ec = EC(h0);
    PresymplecticData data = build_presymplectic(ec);
    return solve_v0(ec, hamiltonian_vector(ec), data);
  };
  Chart c = mech_chart(1);
  CHECK(v0_of("0") == Poly(3));
  CHECK(v0_of("1/2*p1^2") == parse_poly("1/4*p1^2", c));
  CHECK(v0_of("1/2*p1^2 + 1/2*q1^2") ==
        parse_poly("1/4*p1^2 - 1/4*q1^2", c));
}

TEST_CASE("full dynamics verification") {
  for (const char* h0 : {"0", "1/2*p1^2", "1/2*p1^2 + 1/2*q1^2", "q1*p1",
                         "t*q1^2*p1 - 2/3*p1^3"}) {
    DynamicsReport rep = verify_dynamics(EC(h0));
    CHECK(rep.ok());
    CHECK(rep.kernel_residual.is_zero());
    CHECK(rep.contraction_residual.is_zero());
    CHECK(Rational(2) * rep.v0 == rep.lagrangian);
  }
  DynamicsReport rep = verify_dynamics(EC("1/2*p1^2"));
  CHECK(rep.lagrangian == parse_poly("1/2*p1^2", mech_chart(1)));
}

TEST_CASE("random polynomial Hamiltonians, m in {1, 2}") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    for (int m : {1, 2}) {
      InstanceGen gen(1000 + trial, static_cast<std::uint64_t>(m));
      Poly H0 = gen.poly(2 * m + 1, 3, 4);
      DynamicsReport rep = verify_dynamics(ExtendedChart::make(m, H0));
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ExtendedChart::make(0, Poly(1)), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedChart::make(1, Poly(4)), std::invalid_argument);
  // a vector outside the kernel is rejected by solve_v0
  ExtendedChart ec = EC("1/2*p1^2");
  PresymplecticData data = build_presymplectic(ec);
  OrdVec bad(3);
  bad.set_component(1, Poly(3, 1));
  CHECK_THROWS_AS(solve_v0(ec, bad, data), std::invalid_argument);
}
