#pragma once

#include "genform/gvector.hpp"

namespace genform {

// Extended phase space for a constrained Hamiltonian system with m degrees
// of freedom: coordinates (t, q1..qm, p1..pm), the conjugate momentum of t
// eliminated via the constraint Pi = -H0.
struct ExtendedChart {
  int m = 1;
  Chart chart; // dimension 2m+1, coords t, q1..qm, p1..pm
  Poly H0;     // polynomial in (t, q, p)

  static ExtendedChart make(int m, Poly H0, Rational k = 1);

  int t_index() const { return 0; }
  int q_index(int i) const { return 1 + i; }         // 0-based i < m
  int p_index(int i) const { return 1 + m + i; }
};

// theta = p_i dq^i - H0 dt on the constraint surface, omega = d theta,
// Omega = (omega, omega theta).
struct PresymplecticData {
  OrdForm theta;
  OrdForm omega;
  GenForm Omega;
};

PresymplecticData build_presymplectic(const ExtendedChart& ec);

// v1 = d/dt + dH0/dp_i d/dq^i - dH0/dq^i d/dp_i, the t-dot = 1 kernel
// representative; throws std::logic_error if i_{v1} omega != 0.
OrdVec hamiltonian_vector(const ExtendedChart& ec);

// v0 = 1/2 i_{v1} theta; asserts -2 v0 omega + i_{v1}(omega theta) = 0.
Poly solve_v0(const ExtendedChart& ec, const OrdVec& v1,
              const PresymplecticData& data);

struct DynamicsReport {
  ExtendedChart ec;
  PresymplecticData data;
  OrdVec v1;
  Poly v0;
  Poly lagrangian;             // p_i qdot^i - H0 tdot read off v1
  OrdForm kernel_residual;     // i_{v1} omega
  GenForm contraction_residual; // I_V Omega
  Poly lagrangian_residual;    // 2 v0 - lagrangian

  bool ok() const;
};

DynamicsReport verify_dynamics(const ExtendedChart& ec);

std::string render_dynamics_text(const DynamicsReport& report);
std::string render_dynamics_json(const DynamicsReport& report);

} // namespace genform
