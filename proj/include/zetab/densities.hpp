#ifndef ZETAB_DENSITIES_HPP
#define ZETAB_DENSITIES_HPP

#include "zetab/closedforms.hpp"
#include "zetab/logtransform.hpp"
#include "zetab/model.hpp"
#include "zetab/sgo.hpp"

namespace zetab {

struct DensityOpts {
  QuadOpts quad = {1e-11, 16, 14, 64};
  int sphere_order = 64;
};

/* integral over R^{n-1} with the (2pi)^{1-n} normalization, by radial x
   sphere factorization */
template <class F>
cplx integrate_tangential(F&& f, int nm1, const DensityOpts& o = {}) {
  return integrate_halfline([&](double rho) {
    cplx s = sphere_integral([&](const Vec& w) { return f(Vec(rho * w)); }, nm1,
                             o.sphere_order);
    return s * std::pow(rho, nm1 - 1.0);
  }, 0.0, o.quad);
}

/* Trace density of the truncated interior composition P Q^N_lambda at the
   frozen point: int tr[p(xi)] (c|xi|^m - lambda)^{-N} dxi / (2pi)^n, with the
   realized (excised) symbol p and the strictly homogeneous resolvent. */
inline cplx density_interior(const InteriorSymbol& p, const AuxiliaryModel& md, cplx lam,
                             int N, const DensityOpts& o = {}) {
  const int n = p.dim;
  if (p.order + n - md.m * N >= 0)
    throw std::domain_error("density_interior: N too small for convergence");
  cplx total(0);
  for (const auto& t : p.terms) {
    cplx sph = sphere_trace(t, n, o.sphere_order);
    cplx rad = integrate_halfline([&](double r) {
      double ch = chi(r);
      if (ch == 0.0) return cplx(0);
      return ch * std::pow(r, t.degree + n - 1) *
             std::pow(md.c * std::pow(r, md.m) - lam, -double(N));
    }, 0.0, o.quad);
    total += sph * rad;
  }
  if (p.remainder) {
    total += integrate_halfline([&](double r) {
      cplx sph = sphere_integral([&](const Vec& w) {
        return p.remainder(Vec(r * w)).trace();
      }, n, o.sphere_order);
      return sph * std::pow(r, n - 1.0) *
             std::pow(md.c * std::pow(r, md.m) - lam, -double(N));
    }, 0.0, o.quad);
  }
  return total;
}

/* Normal-trace density of the leftover term L(P, Q^N_lambda): for each
   plus-type pole q(xi')(|xi'| + i xi_n)^{-k} the fixed-xi' trace is the N-th
   iterate of q k / (2 c kappa (|xi'| + kappa)^{k+1}); xi'-integrated. */
inline cplx density_leftover(const RationalSymbol& p, const AuxiliaryModel& md, cplx lam,
                             int N, const DensityOpts& o = {}) {
  if (md.m != 2) throw std::domain_error("density_leftover: second-order model only");
  std::vector<PoleTerm> plus;
  for (const auto& t : p.poles)
    if (t.sign == +1) plus.push_back(t);
  if (plus.empty()) return cplx(0);
  auto at = [&](const Vec& xip) {
    double rho = xip.norm();
    if (rho == 0.0) return cplx(0);
    Jet lj = Jet::variable(lam, N);
    Jet kj = model_kappa(md, rho, lj);
    Jet inv2ck = reciprocal(kj * cplx(2.0 * md.c));
    cplx acc(0);
    for (const auto& t : plus) {
      Jet v = cplx(double(t.k)) * t.q(xip) * inv2ck *
              pow_int(reciprocal(kj + cplx(rho)), t.k + 1);
      acc += v.iterate(N);
    }
    return acc;
  };
  return integrate_tangential(at, p.dim - 1, o);
}

/* Trace density of G Q^N_{lambda,+} for a Laguerre singular Green operator:
   the diagonal-symbol formula
     int tr g(xi',xi_n,xi_n) (c|xi|^2 - lambda)^{-N} dxi/(2pi)^n,
   with the xi_n-integral done by the closed Blaschke-pole forms. */
inline cplx density_gq(const LaguerreSGO& g, const AuxiliaryModel& md, cplx lam, int N,
                       const DensityOpts& o = {}) {
  if (md.m != 2) throw std::domain_error("density_gq: second-order model only");
  bool has_rem = false;
  for (int l = 0; l <= g.L; ++l)
    for (int m = 0; m <= g.L; ++m)
      if (g.c[l][m].remainder) has_rem = true;
  auto at = [&, has_rem](const Vec& xip) {
    double rho = xip.norm();
    // below the excision only remainder coefficient parts survive
    if (chi(rho) == 0.0 && !has_rem) return cplx(0);
    double rl = bracket(rho);
    Jet lj = Jet::variable(lam, N);
    Jet kj = model_kappa(md, rho, lj);
    Jet pref = cplx(2.0 * rl) * reciprocal(kj * cplx(2.0 * md.c));
    cplx acc(0);
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        cplx clm = sgo_coeff(g, l, m, xip);
        if (clm == cplx(0)) continue;
        Jet s = blaschke_pole_integral(l, m, rl, kj, +1) +
                blaschke_pole_integral(l, m, rl, kj, -1);
        acc += clm * (pref * s).iterate(N);
      }
    return acc;
  };
  return integrate_tangential(at, g.dim - 1, o);
}

/* Trace density of P_+ G^{(N)}_lambda against the Dirichlet singular Green
   family (profile -e^{-kappa(x+y)}/(2 c kappa)): polynomial parts act by
   normal derivatives on the exponential, pole parts by plain composition. */
inline cplx density_pg(const RationalSymbol& p, const AuxiliaryModel& md, cplx lam, int N,
                       const DensityOpts& o = {}) {
  if (md.m != 2) throw std::domain_error("density_pg: second-order model only");
  auto at = [&](const Vec& xip) {
    double rho = xip.norm();
    if (rho == 0.0) return cplx(0);
    Jet lj = Jet::variable(lam, N);
    Jet kj = model_kappa(md, rho, lj);
    Jet pref = -reciprocal(kj * kj * cplx(4.0 * md.c));
    cplx acc(0);
    for (const auto& t : p.poly) {
      Jet v = t.a(xip) * pref * pow_int(kj * cplx(0, 1), t.j);
      acc += v.iterate(N);
    }
    for (const auto& t : p.poles) {
      Jet v = t.q(xip) * pref * pow_int(reciprocal(kj + cplx(rho)), t.k);
      acc += v.iterate(N);
    }
    return acc;
  };
  return integrate_tangential(at, p.dim - 1, o);
}

/* Trace density of G G^{(N)}_lambda: per xi' the composition against the
   Dirichlet profile is -sum c_lm a_l(kappa) a_m(kappa) / (2 c kappa) with
   the exponential Laguerre moments a_l. */
inline cplx density_gg(const LaguerreSGO& g, const AuxiliaryModel& md, cplx lam, int N,
                       const DensityOpts& o = {}) {
  if (md.m != 2) throw std::domain_error("density_gg: second-order model only");
  auto at = [&](const Vec& xip) {
    double rho = xip.norm();
    double rl = bracket(rho);
    Jet lj = Jet::variable(lam, N);
    Jet kj = model_kappa(md, rho, lj);
    Jet pref = -reciprocal(kj * cplx(2.0 * md.c));
    std::vector<Jet> mom(g.L + 1);
    for (int l = 0; l <= g.L; ++l) mom[l] = laguerre_moment(l, rl, kj);
    cplx acc(0);
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        cplx clm = sgo_coeff(g, l, m, xip);
        if (clm == cplx(0)) continue;
        acc += clm * (pref * mom[l] * mom[m]).iterate(N);
      }
    return acc;
  };
  return integrate_tangential(at, g.dim - 1, o);
}

/* Independent x-space route for Tr(Q^N_{lambda,+} G): the full-line resolvent
   kernel composed with the symbol-kernel by two-dimensional quadrature.
   Slow; used as the opposite-order path in the traciality check. */
inline cplx density_qg_xspace(const LaguerreSGO& g, const AuxiliaryModel& md, cplx lam,
                              int N, const DensityOpts& o = {}) {
  if (md.m != 2) throw std::domain_error("density_qg_xspace: second-order model only");
  auto at = [&](const Vec& xip) {
    double rho = xip.norm();
    double r = bracket(rho);
    CMat C = CMat::Zero(g.L + 1, g.L + 1);
    bool empty = true;
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        C(l, m) = sgo_coeff(g, l, m, xip);
        if (C(l, m) != cplx(0)) empty = false;
      }
    if (empty) return cplx(0);
    /* the double integral int int k(x-y) gkernel(y,x) dy dx collapses to a
       single offset integral against the cross-correlation of the symbol
       kernel along lines x - y = t; that correlation is an exact polynomial
       times e^{-r|t|}, assembled here for both offset signs */
    std::vector<cplx> dp(g.L + 1, cplx(0)), dm(g.L + 1, cplx(0));
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        if (C(l, m) == cplx(0)) continue;
        double sgn = ((l + m) % 2 == 0) ? 1.0 : -1.0;
        std::vector<double> cm = laguerre_corr_coeffs(l, m);
        for (size_t d = 0; d < cm.size(); ++d) dp[d] += C(l, m) * (sgn * cm[d]);
        std::vector<double> cs = laguerre_corr_coeffs(m, l);
        for (size_t d = 0; d < cs.size(); ++d) dm[d] += C(l, m) * (sgn * cs[d]);
      }
    auto corr = [&](double t) {
      double tau = r * std::abs(t);
      const std::vector<cplx>& dd = (t >= 0.0) ? dp : dm;
      cplx acc(0);
      double pw = 1.0;
      for (size_t d = 0; d < dd.size(); ++d, pw *= 2.0 * tau) acc += dd[d] * pw;
      return acc * std::exp(-tau);
    };
    /* both kernels live on the normal scale 1/max(rho, |kappa|); substituting
       keeps their features O(1) wide for the adaptive panels at large mu */
    double sc = 1.0 + std::max(rho, std::abs(model_kappa(md, rho, lam)));
    return integrate_realline([&](double ts) {
      Jet lj = Jet::variable(lam, N);
      Jet kq = model_line_kernel(md, rho, lj, ts / sc);
      return kq.iterate(N) * corr(ts / sc);
    }, o.quad) / sc;
  };
  return integrate_tangential(at, g.dim - 1, o);
}

} // namespace zetab

#endif
