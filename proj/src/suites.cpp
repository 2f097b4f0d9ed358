#include "genform/suites.hpp"

#include "genform/gvector.hpp"
#include "genform/mechanics.hpp"
#include "genform/random_gen.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace genform {

const std::vector<std::string> kSuiteNames = {
    "wedge",  "extd",    "contract", "lie-cartan", "lie-hat",
    "commutator", "jacobi", "defects", "altvect", "mechanics"};

bool is_known_suite(const std::string& name) {
  return name == "all" ||
         std::find(kSuiteNames.begin(), kSuiteNames.end(), name) !=
             kSuiteNames.end();
}

namespace {

struct TrialCtx {
  const SuiteConfig& cfg;
  Chart chart;
  InstanceGen gen;
  int trial;
  SuiteReport& report;

  GenForm form(int degree) {
    return gen.genform(cfg.n, degree, cfg.max_degree, cfg.max_terms);
  }
  GenVec vec() { return gen.genvec(cfg.n, cfg.max_degree, cfg.max_terms); }

  template <class T>
  void check(const std::string& identity, const T& lhs, const T& rhs,
             const std::string& instance) {
    if (lhs == rhs) return;
    report.failures.push_back({trial, identity, lhs.to_string(chart),
                               rhs.to_string(chart), instance});
  }
};

std::string desc(const Chart& c, const GenForm& a) { return a.to_string(c); }
std::string desc(const Chart& c, const GenVec& v) { return v.to_string(c); }

template <class... Ts>
std::string instance_of(const Chart& c, const Ts&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : "; ") + desc(c, xs)), ...);
  return out;
}

int par(int e) { return e % 2 == 0 ? 1 : -1; }

void suite_wedge(TrialCtx& t) {
  int n = t.cfg.n;
  for (int p = -1; p <= n; ++p)
    for (int q = -1; q <= n; ++q) {
      GenForm a = t.form(p);
      GenForm b = t.form(q);
      t.check("gwedge graded commutativity", gwedge(a, b),
              Rational(par(p * q)) * gwedge(b, a), instance_of(t.chart, a, b));
      t.check("gwedge unit", gwedge(GenForm::unit(n), a), a,
              instance_of(t.chart, a));
    }
}

void suite_extd(TrialCtx& t) {
  int n = t.cfg.n;
  t.check("d(zeta) = (k, 0)", gd(t.chart, GenForm::zeta(n)),
          GenForm::scalar(Poly(n, t.chart.k)), std::string("zeta"));
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    t.check("d(d(a)) = 0", gd(t.chart, gd(t.chart, a)),
            GenForm::zero(n, p + 2), instance_of(t.chart, a));
    for (int q = -1; q <= n; ++q) {
      GenForm b = t.form(q);
      t.check("d Leibniz",
              gd(t.chart, gwedge(a, b)),
              gwedge(gd(t.chart, a), b) +
                  Rational(par(p)) * gwedge(a, gd(t.chart, b)),
              instance_of(t.chart, a, b));
    }
  }
}

void suite_contract(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  Rational mu = t.gen.coeff();
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    t.check("contract linearity", gcontract(V + mu * W, a),
            gcontract(V, a) + mu * gcontract(W, a),
            instance_of(t.chart, V, W, a));
    for (int q = -1; q <= n; ++q) {
      GenForm b = t.form(q);
      t.check("contract anti-derivation", gcontract(V, gwedge(a, b)),
              gwedge(gcontract(V, a), b) +
                  Rational(par(p)) * gwedge(a, gcontract(V, b)),
              instance_of(t.chart, V, a, b));
    }
  }
  // I_V of a generalized zero-form does not vanish: (0, i_{v1} alpha_1)
  GenForm a0 = t.form(0);
  t.check("zero-form contraction", gcontract(V, a0),
          GenForm(-1, OrdForm::zero(n, -1), contract_ord(V.v1(), a0.second())),
          instance_of(t.chart, V, a0));
  // I_V of a one-form is a generalized scalar
  if (n >= 1) {
    GenForm a1 = t.form(1);
    t.check("one-form contraction", gcontract(V, a1),
            GenForm(0, contract_ord(V.v1(), a1.first()),
                    V.v0() * a1.first() + contract_ord(V.v1(), a1.second())),
            instance_of(t.chart, V, a1));
  }
}

void suite_lie_cartan(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  Rational lambda = t.gen.coeff();
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    // glie_cartan itself asserts the closed form; surface any mismatch
    GenForm lva = glie_cartan(t.chart, V, a);
    t.check("L linearity", glie_cartan(t.chart, lambda * V + W, a),
            lambda * lva + glie_cartan(t.chart, W, a),
            instance_of(t.chart, V, W, a));
    t.check("[L_V, L_W] = L_{V,W}",
            glie_cartan(t.chart, V, glie_cartan(t.chart, W, a)) -
                glie_cartan(t.chart, W, lva),
            glie_cartan(t.chart, gcommutator(V, W), a),
            instance_of(t.chart, V, W, a));
    // defect blocking a Cartan-formula Lie derivative on vectors
    GenVec D(commutator_ord(V.v1(), W.v1()) + t.chart.k * (V.v0() * W.v1()),
             lie_ord_scalar(V.v1(), W.v0()) - lie_ord_scalar(W.v1(), V.v0()));
    GenForm corr(p - 1, OrdForm::zero(n, p - 1),
                 lie_ord(V.v0() * W.v1(), a.first()));
    t.check("Cartan-formula derivation defect",
            glie_cartan(t.chart, V, gcontract(W, a)) -
                gcontract(W, glie_cartan(t.chart, V, a)),
            gcontract(D, a) - Rational(par(p)) * corr,
            instance_of(t.chart, V, W, a));
    for (int q = -1; q <= n; ++q) {
      GenForm b = t.form(q);
      t.check("L Leibniz", glie_cartan(t.chart, V, gwedge(a, b)),
              gwedge(lva, b) + gwedge(a, glie_cartan(t.chart, V, b)),
              instance_of(t.chart, V, a, b));
    }
  }
}

void suite_lie_hat(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    GenForm hva = glie_hat(t.chart, V, a);
    // correction term relative to the Cartan-formula derivative
    OrdForm dv0 = d_ord(OrdForm::scalar(V.v0()));
    GenForm corr(p, OrdForm::zero(n, p),
                 Rational(par(p)) *
                     (Rational(-1) * (V.v0() * d_ord(a.first())) +
                      Rational(p) * wedge_ord(dv0, a.first())));
    t.check("Lhat - L correction term", hva - glie_cartan(t.chart, V, a), corr,
            instance_of(t.chart, V, a));
    // corrected derivation law
    GenVec D(commutator_ord(V.v1(), W.v1()) + t.chart.k * (V.v0() * W.v1()),
             lie_ord_scalar(V.v1(), W.v0()));
    t.check("Lhat_V I_W - I_W Lhat_V = I_D",
            glie_hat(t.chart, V, gcontract(W, a)) - gcontract(W, hva),
            gcontract(D, a), instance_of(t.chart, V, W, a));
    t.check("Lhat derivation on vectors",
            glie_hat(t.chart, V, gcontract(W, a)),
            gcontract(W, hva) + gcontract(glie_hat_vec(t.chart, V, W), a),
            instance_of(t.chart, V, W, a));
    t.check("[Lhat_V, Lhat_W] = Lhat_{V,W} on forms",
            glie_hat(t.chart, V, glie_hat(t.chart, W, a)) -
                glie_hat(t.chart, W, hva),
            glie_hat(t.chart, gcommutator(V, W), a),
            instance_of(t.chart, V, W, a));
    for (int q = -1; q <= n; ++q) {
      GenForm b = t.form(q);
      t.check("Lhat Leibniz", glie_hat(t.chart, V, gwedge(a, b)),
              gwedge(hva, b) + gwedge(a, glie_hat(t.chart, V, b)),
              instance_of(t.chart, V, a, b));
    }
  }
  GenVec U = t.vec();
  t.check("[Lhat_V, Lhat_W] = Lhat_{V,W} on vectors",
          glie_hat_vec(t.chart, V, glie_hat_vec(t.chart, W, U)) -
              glie_hat_vec(t.chart, W, glie_hat_vec(t.chart, V, U)),
          glie_hat_vec(t.chart, gcommutator(V, W), U),
          instance_of(t.chart, V, W, U));
  // v0 = w0 = 0 reduces to the ordinary Lie derivative
  GenVec Vo(V.v1(), Poly(n));
  GenVec Wo(W.v1(), Poly(n));
  t.check("Lhat_vec ordinary reduction", glie_hat_vec(t.chart, Vo, Wo),
          GenVec(commutator_ord(V.v1(), W.v1()), Poly(n)),
          instance_of(t.chart, Vo, Wo));
}

void suite_commutator(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  GenVec U = t.vec();
  Rational lambda = t.gen.coeff();
  t.check("commutator antisymmetry", gcommutator(V, V), GenVec::zero(n),
          instance_of(t.chart, V));
  t.check("commutator antisymmetry (pair)", gcommutator(V, W),
          -gcommutator(W, V), instance_of(t.chart, V, W));
  t.check("commutator bilinearity", gcommutator(lambda * V + U, W),
          lambda * gcommutator(V, W) + gcommutator(U, W),
          instance_of(t.chart, V, U, W));
  GenVec Vo(V.v1(), Poly(n));
  GenVec Wo(W.v1(), Poly(n));
  t.check("commutator ordinary reduction", gcommutator(Vo, Wo),
          GenVec(commutator_ord(V.v1(), W.v1()), Poly(n)),
          instance_of(t.chart, Vo, Wo));
}

void suite_jacobi(TrialCtx& t) {
  GenVec U = t.vec();
  GenVec V = t.vec();
  GenVec W = t.vec();
  t.check("Jacobi identity",
          gcommutator(U, gcommutator(V, W)) +
              gcommutator(V, gcommutator(W, U)) +
              gcommutator(W, gcommutator(U, V)),
          GenVec::zero(t.cfg.n), instance_of(t.chart, U, V, W));
}

void suite_defects(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    // (I_V I_W + I_W I_V) a = (-1)^(p-1) (w0 i_v1 + v0 i_w1)(0, alpha_p)
    GenForm rhs(p - 2, OrdForm::zero(n, p - 2),
                Rational(par(p - 1)) *
                    (W.v0() * contract_ord(V.v1(), a.first()) +
                     V.v0() * contract_ord(W.v1(), a.first())));
    t.check("anticommutation defect",
            gcontract(V, gcontract(W, a)) + gcontract(W, gcontract(V, a)), rhs,
            instance_of(t.chart, V, W, a));
  }
  GenForm a0 = t.form(0);
  t.check("zero-form contraction", gcontract(V, a0),
          GenForm(-1, OrdForm::zero(n, -1), contract_ord(V.v1(), a0.second())),
          instance_of(t.chart, V, a0));
  // stored nonlinearity witness: needs at least two coordinates
  if (n >= 2) {
    GenVec Vw(OrdVec::basis(n, 0), Poly(n));
    GenForm a(0, OrdForm::zero(n, 0),
              OrdForm::basis(n, {0}, Poly(n, 1)));
    GenForm b(1, OrdForm::basis(n, {1}, Poly(n, 1)), OrdForm::zero(n, 2));
    GenForm lhs = gcontract(gscale(a, Vw), b);
    GenForm rhs2 = gwedge(a, gcontract(Vw, b));
    if (lhs == rhs2)
      t.report.failures.push_back(
          {t.trial, "nonlinearity witness (sides must differ)",
           lhs.to_string(t.chart), rhs2.to_string(t.chart),
           instance_of(t.chart, Vw, a, b)});
  }
  // correction-term identity (same as lie-hat, listed as a defect)
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    OrdForm dv0 = d_ord(OrdForm::scalar(V.v0()));
    GenForm corr(p, OrdForm::zero(n, p),
                 Rational(par(p)) *
                     (Rational(-1) * (V.v0() * d_ord(a.first())) +
                      Rational(p) * wedge_ord(dv0, a.first())));
    t.check("Lhat - L correction term",
            glie_hat(t.chart, V, a) - glie_cartan(t.chart, V, a), corr,
            instance_of(t.chart, V, a));
  }
  // tau functional equation, deterministic, checked once per trial
  for (int p = -1; p <= n; ++p)
    for (int q = -1; q <= n; ++q) {
      if (p + q < -1 || p + q > n) continue;
      if (par(q) * tau(p) + par(p) * tau(q) != tau(p + q))
        t.report.failures.push_back(
            {t.trial, "tau functional equation", std::to_string(tau(p + q)),
             std::to_string(par(q) * tau(p) + par(p) * tau(q)),
             "p=" + std::to_string(p) + ", q=" + std::to_string(q)});
    }
}

void suite_altvect(TrialCtx& t) {
  int n = t.cfg.n;
  GenVec V = t.vec();
  GenVec W = t.vec();
  const Poly& v0 = V.v0();
  const Poly& w0 = W.v0();
  GenVec v0X(OrdVec(n), v0); // v0 * Xbar in pair form
  GenVec w0X(OrdVec(n), w0);
  GenVec w1o(W.v1(), Poly(n));

  t.check("d(zeta) = (k, 0)", gd(t.chart, GenForm::zeta(n)),
          GenForm::scalar(Poly(n, t.chart.k)), std::string("zeta"));
  t.check("zeta ^ zeta = 0", gwedge(GenForm::zeta(n), GenForm::zeta(n)),
          GenForm::zero(n, -2), std::string("zeta"));
  t.check("Lhat_{w1}(v0 Xbar) = (L_{w1} v0) Xbar",
          glie_hat_vec(t.chart, w1o, v0X),
          GenVec(OrdVec(n), lie_ord_scalar(W.v1(), v0)),
          instance_of(t.chart, w1o, v0X));
  t.check("Lhat_{v0 Xbar} w1 = k v0 w1", glie_hat_vec(t.chart, v0X, w1o),
          GenVec(t.chart.k * (v0 * W.v1()), Poly(n)),
          instance_of(t.chart, v0X, w1o));
  t.check("Lhat_{v0 Xbar}(w0 Xbar) = 0", glie_hat_vec(t.chart, v0X, w0X),
          GenVec::zero(n), instance_of(t.chart, v0X, w0X));
  for (int p = -1; p <= n; ++p) {
    GenForm a = t.form(p);
    t.check("Xbar contraction", gcontract(GenVec::unit(n), a),
            GenForm(p - 1, OrdForm::zero(n, p - 1), Rational(tau(p)) * a.first()),
            instance_of(t.chart, a));
    t.check("Lhat_{v0 Xbar} on forms", glie_hat(t.chart, v0X, a),
            GenForm(p, Rational(-p) * t.chart.k * (v0 * a.first()),
                    Rational(-(p + 1)) * t.chart.k * (v0 * a.second())),
            instance_of(t.chart, v0X, a));
  }
}

void suite_mechanics_trial(TrialCtx& t) {
  for (int m : {1, 2}) {
    int dim = 2 * m + 1;
    Poly H0 = t.gen.poly(dim, 3, 4);
    ExtendedChart ec = ExtendedChart::make(m, H0);
    DynamicsReport rep = verify_dynamics(ec);
    if (!rep.ok())
      t.report.failures.push_back(
          {t.trial, "mechanics residuals", render_dynamics_text(rep), "0",
           "m=" + std::to_string(m) + ", H0=" +
               H0.to_string(ec.chart.coords)});
  }
}

using SuiteFn = std::function<void(TrialCtx&)>;

SuiteFn suite_fn(const std::string& name) {
  if (name == "wedge") return suite_wedge;
  if (name == "extd") return suite_extd;
  if (name == "contract") return suite_contract;
  if (name == "lie-cartan") return suite_lie_cartan;
  if (name == "lie-hat") return suite_lie_hat;
  if (name == "commutator") return suite_commutator;
  if (name == "jacobi") return suite_jacobi;
  if (name == "defects") return suite_defects;
  if (name == "altvect") return suite_altvect;
  if (name == "mechanics") return suite_mechanics_trial;
  throw std::invalid_argument("unknown suite: " + name);
}

void run_named(const SuiteConfig& cfg, const std::string& name,
               SuiteReport& report) {
  SuiteFn fn = suite_fn(name);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialCtx ctx{cfg, Chart::standard(cfg.n, cfg.k),
                 InstanceGen(cfg.seed, static_cast<std::uint64_t>(trial)),
                 trial, report};
    fn(ctx);
  }
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (!is_known_suite(cfg.suite))
    throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (cfg.trials < 1) throw std::invalid_argument("trial count must be >= 1");
  if (cfg.n < 1) throw std::invalid_argument("chart dimension must be >= 1");
  if (cfg.k == 0) throw std::invalid_argument("k must be nonzero");

  SuiteReport report{cfg.suite, cfg.seed, cfg.trials, {}};
  if (cfg.suite == "all") {
    for (const std::string& name : kSuiteNames) run_named(cfg, name, report);
  } else {
    run_named(cfg, cfg.suite, report);
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.trial < b.trial; });
  return report;
}

std::string render_report_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << ": seed=" << report.seed
     << " trials=" << report.trials << " failures=" << report.failures.size()
     << (report.passed() ? " PASS" : " FAIL") << "\n";
  for (const Failure& f : report.failures) {
    os << "  trial " << f.trial << ": " << f.identity << "\n";
    os << "    lhs: " << f.lhs << "\n";
    os << "    rhs: " << f.rhs << "\n";
    os << "    instance: " << f.instance << "\n";
  }
  return os.str();
}

std::string render_report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["failures"] = nlohmann::ordered_json::array();
  for (const Failure& f : report.failures) {
    j["failures"].push_back({{"trial", f.trial},
                             {"identity", f.identity},
                             {"lhs", f.lhs},
                             {"rhs", f.rhs},
                             {"instance", f.instance}});
  }
  return j.dump(2) + "\n";
}

} // namespace genform
