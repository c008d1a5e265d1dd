#include "zetab/reports.hpp"

#include "zetab/closedforms.hpp"
#include "zetab/laguerre.hpp"
#include "zetab/quadrature.hpp"

#include "json.hpp"

namespace zetab {

namespace {

using nlohmann::json;

json jc(cplx z) { return json{{"im", z.imag()}, {"re", z.real()}}; }

json check(const std::string& name, cplx value, cplx reference, double tol) {
  double err = std::abs(value - reference);
  return json{{"error", err},
              {"name", name},
              {"pass", err <= tol},
              {"reference", jc(reference)},
              {"tolerance", tol},
              {"value", jc(value)}};
}

bool collect(json& doc, bool* pass) {
  bool ok = true;
  for (const auto& c : doc.at("checks"))
    if (!c.at("pass").get<bool>()) ok = false;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return ok;
}

} // namespace

std::string report_verify(double ts, bool* pass) {
  json doc;
  json& checks = doc["checks"] = json::array();
  QuadOpts q{1e-13, 16, 14, 96};

  // line integral of log(1+s^2)/(1+s^2)
  {
    cplx v = integrate_realline([](double s) {
      return cplx(std::log(1.0 + s * s) / (1.0 + s * s));
    }, q);
    checks.push_back(check("log_lorentzian", v, cplx(log_lorentzian_integral()),
                           1e-10 * ts));
  }
  // frequency-diagonal log weights, all Laguerre indices share one value
  for (double r : {0.5, 1.0, 2.0})
    for (int l : {0, 3}) {
      cplx v = integrate_realline([&](double xi) {
        return std::norm(phihat(l, r, xi)) * std::log(r * r + xi * xi);
      }, q) / (2.0 * pi);
      checks.push_back(check("log_weight_diag_r" + std::to_string(r).substr(0, 3) +
                                 "_l" + std::to_string(l),
                             v, cplx(laguerre_log_diag(r)), 1e-10 * ts));
    }
  // off-diagonal log weights (-1)^k / k
  for (int k = 1; k <= 6; ++k) {
    cplx v = integrate_realline([&](double t) {
      cplx b = cplx(1.0, -t) / cplx(1.0, t);
      cplx bk(1, 0);
      for (int i = 0; i < k; ++i) bk *= b;
      return bk * std::log(1.0 + t * t) / (1.0 + t * t);
    }, q) / pi;
    checks.push_back(check("log_weight_offdiag_k" + std::to_string(k), v,
                           cplx(laguerre_log_offdiag(k)), 1e-10 * ts));
  }
  // radial diagonal integral
  for (double a : {0.5, 1.3, 4.0}) {
    cplx v = integrate_halfline([&](double s) {
      double r = 1.0 + s;
      double w = std::sqrt(r * r + a * a);
      return cplx(1.0 / (r * w * (w + r)));
    }, 0.0, q);
    checks.push_back(check("radial_diag_a" + std::to_string(a).substr(0, 3), v,
                           radial_diag_integral(cplx(a)), 1e-10 * ts));
  }
  // radial off-diagonal integrals
  for (int j : {1, 2, 3})
    for (double a : {0.8, 2.5}) {
      cplx v = integrate_halfline([&](double s) {
        double r = 1.0 + s;
        double w = std::sqrt(r * r + a * a);
        return cplx(std::pow(w - r, j - 1.0) / (w * std::pow(w + r, j + 1.0)));
      }, 0.0, q);
      checks.push_back(check("radial_offdiag_j" + std::to_string(j) + "_a" +
                                 std::to_string(a).substr(0, 3),
                             v, radial_offdiag_integral(j, cplx(a)), 1e-10 * ts));
    }
  // fiber pole integrals against the Blaschke product basis
  {
    double r = 1.1;
    cplx kappa(1.2, 0.7);
    for (int l = 0; l <= 3; ++l)
      for (int m = 0; m <= 3; ++m)
        for (int sign : {+1, -1}) {
          cplx v = integrate_realline([&](double x) {
            return phihat(l, r, x) * std::conj(phihat(m, r, x)) /
                   (2.0 * r) / (kappa + cplx(0, sign) * cplx(x));
          }, q) / (2.0 * pi);
          checks.push_back(check("fiber_pole_l" + std::to_string(l) + "_m" +
                                     std::to_string(m) +
                                     (sign > 0 ? "_plus" : "_minus"),
                                 v, blaschke_pole_integral(l, m, r, kappa, sign),
                                 1e-8 * ts));
        }
  }
  // half-pole log constants
  for (int k = 1; k <= 4; ++k) {
    cplx v = integrate_halfline([&](double s) {
      double t = 1.0 + s;
      return cplx(1.0 / (t * std::pow(1.0 + t, double(k))));
    }, 0.0, q);
    checks.push_back(check("halfpole_k" + std::to_string(k), v,
                           cplx(halfpole_log_constant(k)), 1e-12 * ts));
  }

  collect(doc, pass);
  return doc.dump(2) + "\n";
}

namespace {

json jterm(const TermPair& t, double tol, bool& ok) {
  bool p = t.gap <= tol * std::max(1.0, std::abs(t.closed));
  if (!p) ok = false;
  return json{{"closed", jc(t.closed)},
              {"fitted", jc(t.fitted)},
              {"gap", t.gap},
              {"pass", p}};
}

json jfit(const ExpansionFit& f) {
  json coeffs = json::array();
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    coeffs.push_back(json{{"exponent", f.exponents[i]}, {"value", jc(f.coeffs[i])}});
  return json{{"coefficients", coeffs},
              {"condition", f.condition},
              {"constant", jc(f.a_const)},
              {"iterate_order", f.N},
              {"l0", jc(f.l0)},
              {"log_coefficient", jc(f.a_log)},
              {"residual", f.residual}};
}

const char* kFamilies[5] = {"interior", "leftover", "gq", "pg", "gg"};

} // namespace

std::string report_zeta(const ProblemConfig& cfg, double ts, bool* pass) {
  const double tol = 1e-3 * ts; // per-term closed-vs-fitted agreement
  ZetaReport r = assemble(cfg.p, cfg.g, cfg.model, cfg.opts);
  bool ok = true;
  json doc;
  json& terms = doc["terms"];
  const TermPair* tp[5] = {&r.interior, &r.leftover, &r.gq, &r.pg, &r.gg};
  for (int i = 0; i < 5; ++i) {
    terms[kFamilies[i]] = jterm(*tp[i], tol, ok);
    terms[kFamilies[i]]["fit"] = jfit(r.fits[i]);
  }
  doc["gq_route_gap"] = r.gq_route_gap;
  if (r.gq_route_gap > 1e-6 * ts) ok = false;
  doc["total_closed"] = jc(r.total_closed);
  doc["total_fitted"] = jc(r.total_fitted);
  double tgap = std::abs(r.total_closed - r.total_fitted);
  doc["total_gap"] = tgap;
  if (tgap > tol * std::max(1.0, std::abs(r.total_closed))) ok = false;
  doc["tolerance"] = tol;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return doc.dump(2) + "\n";
}

std::string report_fit(const ProblemConfig& cfg, const std::string& family,
                       double ts, bool* pass) {
  int idx = -1;
  for (int i = 0; i < 5; ++i)
    if (family == kFamilies[i]) idx = i;
  if (idx < 0)
    throw std::invalid_argument("report_fit: unknown family '" + family + "'");
  FamilySweep fs = run_family(Family(idx), cfg.p, cfg.g, cfg.model, cfg.opts);
  json doc;
  doc["family"] = family;
  doc["lattice_top"] = fs.S;
  doc["fit"] = jfit(fs.fit);
  json samples = json::array();
  for (size_t i = 0; i < fs.sweep.mu.size(); ++i)
    samples.push_back(json{{"im", fs.sweep.values[i].imag()},
                           {"mu", fs.sweep.mu[i]},
                           {"re", fs.sweep.values[i].real()}});
  doc["samples"] = samples;
  bool ok = fs.fit.residual <= 1e-6 * ts;
  doc["residual_tolerance"] = 1e-6 * ts;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return doc.dump(2) + "\n";
}

std::string report_defect(const ProblemConfig& cfg, double scale, double ts,
                          bool* pass) {
  DefectReport d = defect_scaling(cfg.p, cfg.g, scale, cfg.model, cfg.opts);
  double tol = ts * std::max(1e-3 * std::abs(d.predicted), 1e-6);
  json doc;
  doc["fitted_difference"] = jc(d.fitted_difference);
  doc["predicted"] = jc(d.predicted);
  doc["gap"] = d.gap;
  doc["scale"] = scale;
  doc["tolerance"] = tol;
  bool ok = d.gap <= tol;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return doc.dump(2) + "\n";
}

std::string report_power(const ProblemConfig& cfg, double ts, bool* pass) {
  PowerReport r = power_consistency(rational_as_interior(cfg.p), cfg.model, cfg.opts);
  double tol = 1e-3 * ts * std::max(1.0, std::abs(r.l0_m2));
  json doc;
  doc["constant_order2"] = jc(r.l0_m2);
  doc["constant_order4"] = jc(r.l0_m4);
  doc["gap"] = r.gap;
  doc["tolerance"] = tol;
  bool ok = r.gap <= tol;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return doc.dump(2) + "\n";
}

std::string report_traciality(const ProblemConfig& cfg, double ts, bool* pass) {
  AssembleOpts right = cfg.opts;
  // the kernel-route sweep is costly per sample; a looser quadrature and a
  // sparser grid still resolve the constant well below the check tolerance
  right.density.quad = {1e-6, 12, 8, 48};
  right.density.sphere_order = 32;
  right.min_count = 16;
  right.ratio = 1.42;
  TracialityReport r = traciality_check(cfg.g, cfg.model, cfg.opts, right);
  double tol = 1e-3 * ts;
  json doc;
  doc["constant_left"] = jc(r.l0_left);
  doc["constant_right"] = jc(r.l0_right);
  doc["gap"] = r.gap;
  doc["tolerance"] = tol;
  bool ok = r.gap <= tol;
  doc["pass"] = ok;
  if (pass) *pass = ok;
  return doc.dump(2) + "\n";
}

} // namespace zetab
