/* Acceptance suite: ten numbered criteria, one pass/fail line each.
 *
 * Usage: acceptance [--only K]
 * Exit status 0 iff every executed criterion passed.
 *
 * Every tolerance is pinned in the criterion body; timing limits are part of
 * the criteria that carry them.
 */

#include "zetab/builtins.hpp"
#include "zetab/reports.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace zetab;

namespace {

// ---- small builders -------------------------------------------------------

// scalar strictly homogeneous term |xi|^deg f(omega) over R^dim
InteriorSymbol hom_symbol(int dim, std::vector<std::pair<double, std::function<double(const Vec&)>>> parts) {
  InteriorSymbol s;
  s.dim = dim;
  s.order = parts.front().first;
  for (auto& [deg, f] : parts) {
    s.order = std::max(s.order, deg);
    auto fn = f;
    double d = deg;
    s.terms.push_back({d, [fn, d](const Vec& v) {
                         CMat m(1, 1);
                         double r = v.norm();
                         m(0, 0) = (r == 0.0) ? cplx(0) : cplx(std::pow(r, d) * fn(v / r));
                         return m;
                       }});
  }
  return s;
}

InteriorSymbol coeff1(double deg, double a, double b = 0.0) {
  InteriorSymbol s;
  s.dim = 1;
  s.order = deg;
  s.terms.push_back({deg, [deg, a, b](const Vec& v) {
                       CMat m(1, 1);
                       double r = v.norm();
                       m(0, 0) = (r == 0.0)
                                     ? cplx(0)
                                     : cplx(std::pow(r, deg) * (a + b * v[0] / r));
                       return m;
                     }});
  return s;
}

bool g_verbose = false;

struct Check {
  double worst = 0.0;
  std::string detail;
  bool ok = true;
  void expect(const std::string& what, double err, double tol) {
    if (g_verbose)
      std::printf("    %-40s err %.3e  tol %.1e\n", what.c_str(), err, tol);
    worst = std::max(worst, err);
    if (err > tol) {
      ok = false;
      std::ostringstream ss;
      ss << "; " << what << " err " << err << " > tol " << tol;
      detail += ss.str();
    }
  }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// shared fit runner mirroring the assembly lattice rules but with a free N
ExpansionFit fit_with_N(const std::function<cplx(cplx, int)>& dens,
                        const AuxiliaryModel& md, int S, int N, const FitOpts& fo,
                        double mu0 = 32.0, double ratio = 1.35) {
  int cols = S + 2 + fo.guard_columns + fo.guard_log_columns;
  RaySweep s = make_sweep(N, md.theta, md.m, mu0, ratio, 2 * cols + 2);
  for (double mu : s.mu) s.values.push_back(dens(lambda_on_ray(md, mu), N));
  return fit_expansion(s, S, 0, true, fo);
}

// ---- criteria -------------------------------------------------------------

// 1: pinned closed-form integrals against quadrature, under 10 s
bool crit_appendix(std::string& msg) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  QuadOpts q{1e-13, 16, 14, 96};

  cplx lor = integrate_realline(
      [](double s) { return cplx(std::log(1.0 + s * s) / (1.0 + s * s)); }, q);
  c.expect("log-lorentzian", std::abs(lor - log_lorentzian_integral()), 1e-10);

  for (double a : {0.5, 1.0, 2.0, 10.0}) {
    cplx ref = radial_diag_integral(cplx(a));
    cplx v = integrate_halfline([&](double s) {
      double r = 1.0 + s, w = std::sqrt(r * r + a * a);
      return cplx(1.0 / (r * w * (w + r)));
    }, 0.0, q);
    c.expect("radial-diag", std::abs(v - ref) / std::abs(ref), 1e-10);
    for (int j : {1, 2, 3}) {
      cplx refj = radial_offdiag_integral(j, cplx(a));
      cplx vj = integrate_halfline([&](double s) {
        double r = 1.0 + s, w = std::sqrt(r * r + a * a);
        return cplx(std::pow(w - r, j - 1.0) / (w * std::pow(w + r, j + 1.0)));
      }, 0.0, q);
      c.expect("radial-offdiag", std::abs(vj - refj) / std::abs(refj), 1e-10);
    }
  }

  double r = 1.0;
  for (double kap : {0.5, 2.0})
    for (int l = 0; l <= 4; ++l)
      for (int m = 0; m <= 4; ++m)
        for (int sign : {+1, -1}) {
          cplx ref = blaschke_pole_integral(l, m, r, cplx(kap), sign);
          cplx v = integrate_realline([&](double x) {
            return phihat(l, r, x) * std::conj(phihat(m, r, x)) / (2.0 * r) /
                   (cplx(kap) + cplx(0, sign) * cplx(x));
          }, q) / (2.0 * pi);
          c.expect("fiber-pole", std::abs(v - ref), 1e-8);
        }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10.0) {
    c.ok = false;
    c.detail += "; runtime limit 10 s exceeded";
  }
  std::ostringstream ss;
  ss << "closed-form integral oracles (worst err " << c.worst << ", " << secs << " s)"
     << c.detail;
  msg = ss.str();
  return c.ok;
}

// 2: basis orthonormality, exact off-diagonal trace, plus-space projection
bool crit_basis(std::string& msg) {
  Check c;
  QuadOpts q{1e-13, 16, 14, 96};
  for (double r : {0.5, 1.0, 2.0})
    for (int l = 0; l <= 20; ++l)
      for (int m = l; m <= 20; ++m) {
        cplx v = integrate_halfline(
            [&](double x) { return cplx(phix(l, r, x) * phix(m, r, x)); }, 0.0, q);
        c.expect("orthonormality", std::abs(v - (l == m ? 1.0 : 0.0)), 1e-10);
      }

  // purely off-diagonal family has exactly zero normal trace
  LaguerreSGO goff = LaguerreSGO::zero(2, 2, 0.0);
  goff.c[0][1] = coeff1(-1.0, 0.7);
  goff.c[2][0] = coeff1(-1.0, -0.4);
  Vec xp(1);
  xp << 1.3;
  if (sgo_trn(goff, xp) != cplx(0)) {
    c.ok = false;
    c.detail += "; off-diagonal normal trace not exactly zero";
  }

  /* a decaying plus-type fiber function lies in the span of the basis: its
     projection coefficients match the exponential moments and the truncated
     series reproduces it pointwise */
  double r = 1.0;
  cplx kap(1.3, 0.4);
  auto f = [&](double xin) { return reciprocal(kap + cplx(0, 1) * cplx(xin)); };
  std::vector<cplx> b = project_plus(f, r, 30, q);
  for (int l = 0; l <= 30; ++l)
    c.expect("projection coefficient", std::abs(b[l] - laguerre_moment(l, r, kap)),
             1e-8);
  for (double xin : {-3.0, -0.4, 0.0, 1.7, 8.0}) {
    cplx acc(0);
    for (int l = 0; l <= 30; ++l) acc += b[l] * phihat(l, r, xin);
    c.expect("series reconstruction", std::abs(acc - f(xin)), 1e-8);
  }
  std::ostringstream ss;
  ss << "Laguerre basis identities (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 3: interior expansion coefficients, log coefficient, constant, N-stability
bool crit_interior_expansion(std::string& msg) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  AuxiliaryModel md; // m = 2, c = 1
  InteriorSymbol p = hom_symbol(2, {
      {0.0, [](const Vec& w) { return 0.7 + 0.2 * w[0]; }},
      {-1.0, [](const Vec& w) { return -0.4 + 0.1 * w[1]; }},
      {-2.0, [](const Vec& w) { return 0.9 + 0.3 * w[0] * w[1]; }},
  });
  DensityOpts dq;
  FitOpts fo{6, 2, 1e10};

  // reference leading coefficients: sphere factor times the radial Beta form
  auto radial = [&](double a, int N) {
    return std::tgamma(a / 2.0) * std::tgamma(N - a / 2.0) / (2.0 * std::tgamma(double(N)));
  };
  cplx S0 = sphere_trace(p.terms[0], 2), S1 = sphere_trace(p.terms[1], 2),
       S2 = sphere_trace(p.terms[2], 2);

  cplx l0_ref = finite_part(p);
  cplx l0_byN[2];
  for (int N : {2, 3}) {
    ExpansionFit fit = fit_with_N([&](cplx lam, int n) {
      return density_interior(p, md, lam, n, dq);
    }, md, 2, N, fo);
    // exponents are ordered: (2)/2 - N, then 1/2 - N
    c.expect("leading coefficient N=" + std::to_string(N),
             std::abs(fit.coeffs[0] - S0 * radial(2.0, N)) /
                 std::abs(S0 * radial(2.0, N)), 1e-5);
    c.expect("half-power coefficient N=" + std::to_string(N),
             std::abs(fit.coeffs[1] - S1 * radial(1.0, N)) /
                 std::abs(S1 * radial(1.0, N)), 1e-5);
    c.expect("log coefficient N=" + std::to_string(N),
             std::abs(fit.a_log - 0.5 * S2), 1e-5);
    c.expect("constant N=" + std::to_string(N), std::abs(fit.l0 - l0_ref), 1e-4);
    l0_byN[N - 2] = fit.l0;
  }
  c.expect("N-consistency", std::abs(l0_byN[0] - l0_byN[1]), 1e-4);

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 120.0) {
    c.ok = false;
    c.detail += "; runtime limit 120 s exceeded";
  }
  std::ostringstream ss;
  ss << "interior resolvent expansion (worst err " << c.worst << ", " << secs
     << " s)" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 4: diagonal singular Green family: log coefficient and the -log 2 constant
bool crit_diagonal_log(std::string& msg) {
  Check c;
  AuxiliaryModel md; // c = 1
  LaguerreSGO g = LaguerreSGO::zero(2, 1, 0.0);
  g.c[1][1] = coeff1(-1.0, 0.7);
  AssembleOpts o;
  ExpansionFit fit = run_family(Family::gq, RationalSymbol{0, 2, {}, {}}, g, md, o).fit;
  cplx resC = res_x(sgo_trn_symbol(g));
  cplx trp = finite_part(sgo_trn_symbol(g));
  c.expect("log coefficient vs half residue", std::abs(fit.a_log - 0.5 * resC), 1e-4);
  c.expect("constant vs -log2 residue",
           std::abs((fit.l0 - trp) - (-std::log(2.0) * resC)), 1e-4);
  std::ostringstream ss;
  ss << "diagonal family log structure (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 5: fitted constant of G against the resolvent equals its closed form
bool crit_green_resolvent(std::string& msg) {
  Check c;
  AuxiliaryModel md; // c = 1
  LaguerreSGO g = LaguerreSGO::zero(2, 1, 0.0);
  g.c[0][0] = coeff1(-1.0, 0.8);
  g.c[1][1] = coeff1(-1.0, -0.25);
  g.c[0][1] = coeff1(-1.0, 0.5);
  g.c[1][0] = coeff1(-1.0, -0.2);
  AssembleOpts o;
  double route_gap = 0.0;
  cplx closed = term_gq(g, md, &route_gap);
  ExpansionFit fit = run_family(Family::gq, RationalSymbol{0, 2, {}, {}}, g, md, o).fit;
  c.expect("fitted vs closed", std::abs(fit.l0 - closed) / std::abs(closed), 1e-3);
  c.expect("log-weight route agreement", route_gap, 1e-6);
  std::ostringstream ss;
  ss << "singular Green vs resolvent constant (worst err " << c.worst << ")"
     << c.detail;
  msg = ss.str();
  return c.ok;
}

// 6: leftover-composition constant equals the half residue of its log trace
bool crit_leftover(std::string& msg) {
  Check c;
  ProblemConfig cfg = parse_config(builtin_config_json());
  cplx closed = term_leftover(cfg.p, cfg.model);
  ExpansionFit fit = run_family(Family::leftover, cfg.p, cfg.g, cfg.model, cfg.opts).fit;
  c.expect("minus fitted constant vs closed", rel(-fit.l0, closed), 1e-3);
  std::ostringstream ss;
  ss << "leftover composition constant (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 7: G against the boundary log kernel
bool crit_green_green(std::string& msg) {
  Check c;
  ProblemConfig cfg = parse_config(builtin_config_json());
  cplx closed = term_gg(cfg.g, cfg.model);
  ExpansionFit fit = run_family(Family::gg, cfg.p, cfg.g, cfg.model, cfg.opts).fit;
  c.expect("fitted vs closed", rel(fit.l0, closed), 1e-3);
  std::ostringstream ss;
  ss << "boundary log-kernel constant (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 8: scaling defect for nonzero and zero residue
bool crit_defect(std::string& msg) {
  Check c;
  ProblemConfig cfg = parse_config(builtin_config_json());
  DefectReport d = defect_scaling(cfg.p, cfg.g, 2.0, cfg.model, cfg.opts);
  if (std::abs(d.predicted) < 1e-3) {
    c.ok = false;
    c.detail += "; builtin residue unexpectedly zero";
  }
  c.expect("nonzero-residue defect", d.gap / std::abs(d.predicted), 1e-3);

  RationalSymbol p0{0, 2, {}, {}};
  LaguerreSGO g0 = LaguerreSGO::zero(2, 0, 0.0);
  g0.c[0][0] = coeff1(-2.0, 0.3); // residue-free: no degree 1-n part
  DefectReport dz = defect_scaling(p0, g0, 2.0, AuxiliaryModel{}, cfg.opts);
  if (dz.predicted != cplx(0)) {
    c.ok = false;
    c.detail += "; zero-residue prediction not exactly zero";
  }
  c.expect("zero-residue defect", std::abs(dz.fitted_difference), 1e-6);
  std::ostringstream ss;
  ss << "constant-scaling defect (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 9: order-2 model against the squared order-4 model
bool crit_power(std::string& msg) {
  Check c;
  AssembleOpts o;
  InteriorSymbol pa = hom_symbol(2, {{0.0, [](const Vec& w) { return 1.0 + 0.3 * w[0]; }}});
  InteriorSymbol pb = hom_symbol(2, {{-1.0, [](const Vec&) { return 0.6; }}});
  AuxiliaryModel base;
  base.c = 1.2;
  for (const InteriorSymbol* p : {&pa, &pb}) {
    PowerReport r = power_consistency(*p, base, o);
    c.expect("order-2 vs order-4 constant", r.gap, 1e-3);
  }
  std::ostringstream ss;
  ss << "auxiliary-power consistency (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

// 10: left against right composition for the order-0 builtin suite
bool crit_traciality(std::string& msg) {
  Check c;
  AssembleOpts right;
  right.density.quad = {1e-6, 12, 8, 48};
  right.density.sphere_order = 32;
  right.min_count = 16;
  right.ratio = 1.42;

  LaguerreSGO gd = LaguerreSGO::zero(2, 1, 0.0);
  gd.c[0][0] = coeff1(-1.0, 0.9);
  gd.c[1][1] = coeff1(-1.0, -0.3);
  TracialityReport r1 = traciality_check(gd, AuxiliaryModel{}, AssembleOpts{}, right);
  c.expect("diagonal suite", r1.gap, 1e-3);

  ProblemConfig cfg = parse_config(builtin_config_json());
  TracialityReport r2 = traciality_check(cfg.g, cfg.model, cfg.opts, right);
  c.expect("generic suite", r2.gap, 1e-3);
  std::ostringstream ss;
  ss << "composition-order traciality (worst err " << c.worst << ")" << c.detail;
  msg = ss.str();
  return c.ok;
}

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    if (std::strcmp(argv[i], "--verbose") == 0) g_verbose = true;
  }

  std::pair<const char*, bool (*)(std::string&)> crits[] = {
      {"appendix oracles", crit_appendix},
      {"basis identities", crit_basis},
      {"interior expansion", crit_interior_expansion},
      {"diagonal log structure", crit_diagonal_log},
      {"green-resolvent constant", crit_green_resolvent},
      {"leftover constant", crit_leftover},
      {"log-kernel constant", crit_green_green},
      {"scaling defect", crit_defect},
      {"power consistency", crit_power},
      {"traciality", crit_traciality},
  };

  bool all_ok = true;
  for (int k = 1; k <= 10; ++k) {
    if (only != 0 && only != k) continue;
    std::string msg;
    bool ok = false;
    try {
      ok = crits[k - 1].second(msg);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d: %s  %s\n", k, ok ? "PASS" : "FAIL", msg.c_str());
    std::fflush(stdout);
    if (!ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
