#include "genform/mechanics.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace genform {

ExtendedChart ExtendedChart::make(int m, Poly H0, Rational k) {
  if (m < 1) throw std::invalid_argument("degrees of freedom must be positive");
  int dim = 2 * m + 1;
  if (H0.nvars() != dim)
    throw std::invalid_argument("H0 must be a polynomial in (t, q, p)");
  ExtendedChart ec;
  ec.m = m;
  ec.chart.n = dim;
  ec.chart.k = std::move(k);
  ec.chart.coords.push_back("t");
  for (int i = 1; i <= m; ++i) ec.chart.coords.push_back("q" + std::to_string(i));
  for (int i = 1; i <= m; ++i) ec.chart.coords.push_back("p" + std::to_string(i));
  ec.H0 = std::move(H0);
  return ec;
}

PresymplecticData build_presymplectic(const ExtendedChart& ec) {
  int n = ec.chart.n;
  // theta = p_i dq^i - H0 dt on the constraint surface Pi = -H0
  OrdForm theta(n, 1);
  for (int i = 0; i < ec.m; ++i)
    theta.add_term({ec.q_index(i)}, Poly::variable(n, ec.p_index(i)));
  theta.add_term({ec.t_index()}, -ec.H0);

  OrdForm omega = d_ord(theta);
  GenForm Omega(2, omega, wedge_ord(omega, theta));
  return {std::move(theta), std::move(omega), std::move(Omega)};
}

OrdVec hamiltonian_vector(const ExtendedChart& ec) {
  int n = ec.chart.n;
  OrdVec v1(n);
  v1.set_component(ec.t_index(), Poly(n, 1));
  for (int i = 0; i < ec.m; ++i) {
    v1.set_component(ec.q_index(i), ec.H0.partial(ec.p_index(i)));
    v1.set_component(ec.p_index(i), -ec.H0.partial(ec.q_index(i)));
  }
  OrdForm residual = contract_ord(v1, build_presymplectic(ec).omega);
  if (!residual.is_zero())
    throw std::logic_error("kernel candidate fails i_v1 omega = 0");
  return v1;
}

Poly solve_v0(const ExtendedChart& ec, const OrdVec& v1,
              const PresymplecticData& data) {
  OrdForm kernel = contract_ord(v1, data.omega);
  if (!kernel.is_zero())
    throw std::invalid_argument("v1 is not in the kernel of omega");
  OrdForm ivtheta = contract_ord(v1, data.theta);
  Poly v0 = Rational(1, 2) *
            (ivtheta.is_zero() ? Poly(ec.chart.n) : ivtheta.component({}));
  OrdForm residual = Rational(-2) * (v0 * data.omega) +
                     contract_ord(v1, wedge_ord(data.omega, data.theta));
  if (!residual.is_zero())
    throw std::logic_error("-2 v0 omega + i_v1(omega theta) != 0");
  return v0;
}

DynamicsReport verify_dynamics(const ExtendedChart& ec) {
  DynamicsReport rep{ec, build_presymplectic(ec), OrdVec(ec.chart.n),
                     Poly(ec.chart.n), Poly(ec.chart.n),
                     OrdForm::zero(ec.chart.n, 0),
                     GenForm::zero(ec.chart.n, 1), Poly(ec.chart.n)};
  rep.v1 = hamiltonian_vector(ec);
  rep.kernel_residual = contract_ord(rep.v1, rep.data.omega);
  rep.v0 = solve_v0(ec, rep.v1, rep.data);
  rep.contraction_residual = gcontract(GenVec(rep.v1, rep.v0), rep.data.Omega);

  // constrained Lagrangian p_i qdot^i - H0 tdot with the dots read off v1
  Poly lag(ec.chart.n);
  for (int i = 0; i < ec.m; ++i)
    lag += Poly::variable(ec.chart.n, ec.p_index(i)) *
           rep.v1.component(ec.q_index(i));
  lag -= ec.H0 * rep.v1.component(ec.t_index());
  rep.lagrangian = lag;
  rep.lagrangian_residual = Rational(2) * rep.v0 - lag;
  return rep;
}

bool DynamicsReport::ok() const {
  return kernel_residual.is_zero() && contraction_residual.is_zero() &&
         lagrangian_residual.is_zero();
}

std::string render_dynamics_text(const DynamicsReport& rep) {
  const Chart& c = rep.ec.chart;
  std::ostringstream os;
  os << "H0 = " << rep.ec.H0.to_string(c.coords) << "\n";
  os << "theta = " << rep.data.theta.to_string(c) << "\n";
  os << "omega = " << rep.data.omega.to_string(c) << "\n";
  os << "v1 = " << rep.v1.to_string(c) << "\n";
  os << "v0 = " << rep.v0.to_string(c.coords) << "\n";
  os << "lagrangian (2*v0) = " << rep.lagrangian.to_string(c.coords) << "\n";
  os << "residual i_v1(omega) = " << rep.kernel_residual.to_string(c) << "\n";
  os << "residual I_V(Omega) = " << rep.contraction_residual.to_string(c)
     << "\n";
  os << "residual 2*v0 - L = " << rep.lagrangian_residual.to_string(c.coords)
     << "\n";
  os << (rep.ok() ? "OK" : "FAIL") << "\n";
  return os.str();
}

std::string render_dynamics_json(const DynamicsReport& rep) {
  const Chart& c = rep.ec.chart;
  nlohmann::ordered_json j;
  j["m"] = rep.ec.m;
  j["H0"] = rep.ec.H0.to_string(c.coords);
  j["theta"] = rep.data.theta.to_string(c);
  j["omega"] = rep.data.omega.to_string(c);
  j["v1"] = rep.v1.to_string(c);
  j["v0"] = rep.v0.to_string(c.coords);
  j["lagrangian"] = rep.lagrangian.to_string(c.coords);
  j["residuals"] = {
      {"kernel", rep.kernel_residual.to_string(c)},
      {"contraction", rep.contraction_residual.to_string(c)},
      {"lagrangian", rep.lagrangian_residual.to_string(c.coords)},
  };
  j["ok"] = rep.ok();
  return j.dump(2) + "\n";
}

} // namespace genform
