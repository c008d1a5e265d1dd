#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetab/assembly.hpp"

using namespace zetab;

namespace {

// one-term homogeneous symbol over R (tangential coefficients at n = 2)
InteriorSymbol hom1(double deg, std::function<double(double)> f) {
  InteriorSymbol s;
  s.dim = 1;
  s.order = deg;
  s.terms.push_back({deg, [f](const Vec& v) {
                       CMat m(1, 1);
                       m(0, 0) = f(v[0]);
                       return m;
                     }});
  return s;
}

// |x|^deg (a + b sgn x), the general scalar homogeneous function on R
std::function<double(double)> homf(double deg, double a, double b = 0.0) {
  return [deg, a, b](double x) {
    return std::pow(std::abs(x), deg) * (a + (x < 0 ? -b : b));
  };
}

std::function<cplx(const Vec&)> homq(double deg, double a, double b = 0.0) {
  auto f = homf(deg, a, b);
  return [f](const Vec& v) { return cplx(f(v[0])); };
}

/* Generic rational interior symbol at n = 2: a constant and three
   residue-active poles of both types.  Coefficient degrees stay >= 0; the
   strictly homogeneous boundary families do not admit negative-degree
   coefficients (non-integrable at xi' = 0). */
RationalSymbol builtin_p() {
  RationalSymbol p;
  p.dim = 2;
  p.order = 0;
  p.poly.push_back({homq(0, 0.4), 0, 0});
  p.poles.push_back({homq(0, 0.7), 0, +1, 1});
  p.poles.push_back({homq(1, 0.5), 1, +1, 2});
  p.poles.push_back({homq(0, -0.3), 0, -1, 1});
  return p;
}

// generic order-0 Laguerre family at n = 2 with residue-active coefficients
LaguerreSGO builtin_g() {
  LaguerreSGO g = LaguerreSGO::zero(2, 2, 0.0);
  g.c[0][0] = hom1(-1, homf(-1, 0.8, 0.15));
  g.c[1][1] = hom1(-1, homf(-1, -0.25));
  g.c[2][2] = hom1(-1, homf(-1, 0.1));
  g.c[0][1] = hom1(-1, homf(-1, 0.5));
  g.c[1][0] = hom1(-1, homf(-1, -0.2, 0.1));
  g.c[2][1] = hom1(-1, homf(-1, 0.15));
  g.c[0][2] = hom1(-2, homf(-2, 0.3)); // below the residue degree
  return g;
}

} // namespace

TEST_CASE("interior term: log-symbol constant and scale covariance") {
  InteriorSymbol p;
  p.dim = 2;
  p.order = -2;
  p.terms.push_back({-2, [](const Vec& xi) {
                       CMat m(1, 1);
                       m(0, 0) = (1.0 + 0.3 * xi[0] * xi[1] / xi.squaredNorm()) /
                                 xi.squaredNorm();
                       return m;
                     }});
  AuxiliaryModel c1; // c = 1
  CHECK(std::abs(term_interior(p, c1) - finite_part(p)) < 1e-12);

  AuxiliaryModel c2;
  c2.c = 2.0;
  cplx diff = term_interior(p, c2) - term_interior(p, c1);
  CHECK(std::abs(diff - (-0.5 * std::log(2.0) * res_x(p))) < 1e-10);

  // no degree -n term: the log part cannot contribute for any c
  InteriorSymbol frac;
  frac.dim = 2;
  frac.order = -1.5;
  frac.terms.push_back({-1.5, [](const Vec& xi) {
                          CMat m(1, 1);
                          m(0, 0) = std::pow(xi.norm(), -1.5);
                          return m;
                        }});
  CHECK(std::abs(term_interior(frac, c2) - finite_part(frac)) < 1e-12);
}

TEST_CASE("leftover term: closed value and fitted family") {
  AuxiliaryModel md;
  md.c = 1.4;
  RationalSymbol none;
  none.dim = 2;
  CHECK(term_leftover(none, md) == cplx(0));

  // single unit plus-pole: residue -1/(2pi), so the term is -1/(4pi)
  RationalSymbol p;
  p.dim = 2;
  p.order = -1;
  p.poles.push_back({homq(0, 1.0), 0, +1, 1});
  cplx t = term_leftover(p, md);
  CHECK(std::abs(t - cplx(-1.0 / (4.0 * pi))) < 1e-12);

  // minus the fitted constant of the leftover resolvent family
  int N = 1;
  RaySweep s = make_sweep(N, md.theta, md.m);
  for (double mu : s.mu)
    s.values.push_back(density_leftover(p, md, lambda_on_ray(md, mu), N));
  CHECK(std::abs(-fit_expansion(s, 0, 0).l0 - t) < 1e-9);

  // non-integer pole degree never reaches the residue degree
  RationalSymbol fr;
  fr.dim = 2;
  fr.poles.push_back({homq(0.5, 1.0), 0.5, +1, 1});
  CHECK(term_leftover(fr, md) == cplx(0));
}

TEST_CASE("gq term: diagonal bookkeeping and the dual-route gap") {
  AuxiliaryModel md;
  md.c = 1.7;
  CHECK(term_gq(LaguerreSGO::zero(2, 1), md) == cplx(0));

  LaguerreSGO d = LaguerreSGO::zero(2, 1, 0.0);
  d.c[0][0] = hom1(-1, homf(-1, 0.8));
  d.c[1][1] = hom1(-1, homf(-1, -0.25));
  InteriorSymbol trn = sgo_trn_symbol(d);
  cplx expect = finite_part(trn) -
                0.5 * (2.0 * std::log(2.0) + std::log(md.c)) * res_x(trn);
  double gap = 1.0;
  cplx t = term_gq(d, md, &gap);
  CHECK(std::abs(t - expect) < 1e-10);
  CHECK(gap < 1e-8);

  double gap2 = 1.0;
  term_gq(builtin_g(), md, &gap2);
  CHECK(gap2 < 1e-8);
}

TEST_CASE("pg term: pole weights, polynomial part void") {
  AuxiliaryModel md;
  md.c = 1.3;
  RationalSymbol none;
  none.dim = 2;
  CHECK(term_pg(none, md) == cplx(0));

  // unit plus-pole, k = 1: -log(2)/(4 pi)
  RationalSymbol p1;
  p1.dim = 2;
  p1.order = -1;
  p1.poles.push_back({homq(0, 1.0), 0, +1, 1});
  CHECK(std::abs(term_pg(p1, md) - cplx(-std::log(2.0) / (4.0 * pi))) < 1e-12);

  // mirrored pole carries the same weight (u,v-substitution symmetry)
  RationalSymbol m1 = p1;
  m1.poles[0].sign = -1;
  CHECK(std::abs(term_pg(m1, md) - term_pg(p1, md)) < 1e-15);
  int N = 2;
  RaySweep sm = make_sweep(N, md.theta, md.m);
  for (double mu : sm.mu)
    sm.values.push_back(density_pg(m1, md, lambda_on_ray(md, mu), N));
  CHECK(std::abs(fit_expansion(sm, 1, 0).l0 - term_pg(m1, md)) < 1e-9);

  // k = 2 pole against its fitted family
  RationalSymbol p2;
  p2.dim = 2;
  p2.order = -1;
  p2.poles.push_back({homq(1, 1.0), 1, +1, 2});
  RaySweep s2 = make_sweep(N, md.theta, md.m);
  for (double mu : s2.mu)
    s2.values.push_back(density_pg(p2, md, lambda_on_ray(md, mu), N));
  CHECK(std::abs(fit_expansion(s2, 1, 0).l0 - term_pg(p2, md)) < 1e-9);

  // polynomial-only symbol: exact pure powers, zero constant both ways
  RationalSymbol poly;
  poly.dim = 2;
  poly.order = 1;
  poly.poly.push_back({homq(0, 1.0), 0, 0});
  poly.poly.push_back({homq(0, 0.6), 0, 1});
  CHECK(term_pg(poly, md) == cplx(0));
  int Np = 2;
  RaySweep sp = make_sweep(Np, md.theta, md.m);
  for (double mu : sp.mu)
    sp.values.push_back(density_pg(poly, md, lambda_on_ray(md, mu), Np));
  CHECK(std::abs(fit_expansion(sp, 3, 0).l0) < 1e-8);
}

TEST_CASE("gg term: composition trace against the log kernel") {
  AuxiliaryModel md;
  md.c = 1.2;
  CHECK(term_gg(LaguerreSGO::zero(2, 1), md) == cplx(0));

  // separable rank-one family: -1/(2 pi) exactly
  LaguerreSGO r1 = LaguerreSGO::zero(2, 0, 0.0);
  r1.c[0][0] = hom1(-1, homf(-1, 1.0));
  CHECK(std::abs(term_gg(r1, md) - cplx(-1.0 / (2.0 * pi))) < 1e-9);

  /* generic family against the closed Laguerre-convolution weights
     (-1)^{l+m}/(l+m+1) */
  LaguerreSGO g = builtin_g();
  auto oracle = [&](const Vec& w) {
    cplx acc(0);
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        cplx c(0);
        for (const auto& t : g.c[l][m].terms)
          if (std::abs(t.degree + 1.0) < 1e-9) c += t.eval(w)(0, 0);
        double sgn = ((l + m) % 2 == 0) ? 1.0 : -1.0;
        acc += c * sgn / double(l + m + 1);
      }
    return acc;
  };
  cplx expect = -0.5 * sphere_integral(oracle, 1, 64);
  CHECK(std::abs(term_gg(g, md) - expect) < 1e-8);

  // the exterior-type log kernel is the negative of the Dirichlet one
  KernelSGO kd = glog_kernel(md, true), ke = glog_kernel(md, false);
  Vec w(1);
  w << 1.0;
  CHECK(std::abs(kd.kernel(w, 0.3, 0.7) + ke.kernel(w, 0.3, 0.7)) < 1e-14);
}

TEST_CASE("assembled report: every closed term meets its fitted constant") {
  AuxiliaryModel md;
  md.c = 1.3;
  ZetaReport r = assemble(builtin_p(), builtin_g(), md);
  CHECK(r.interior.gap < 1e-4);
  CHECK(r.leftover.gap < 1e-7);
  CHECK(r.gq.gap < 1e-5);
  CHECK(r.pg.gap < 1e-6);
  CHECK(r.gg.gap < 1e-5);
  CHECK(r.gq_route_gap < 1e-6);
  CHECK(std::abs(r.total_closed - r.total_fitted) < 1e-4);
  for (const ExpansionFit& f : r.fits) CHECK(f.residual < 1e-6);

  // zero data in, zero report out
  RationalSymbol zp;
  zp.dim = 2;
  zp.order = -1; // keeps the trivial interior family convergent at N = 1
  ZetaReport z = assemble(zp, LaguerreSGO::zero(2, 1), md);
  CHECK(std::abs(z.total_closed) < 1e-14);
  CHECK(std::abs(z.total_fitted) < 1e-10);
}

TEST_CASE("defect scaling matches the residue prediction") {
  AuxiliaryModel base;
  DefectReport d = defect_scaling(builtin_p(), builtin_g(), 2.0, base);
  CHECK(std::abs(d.predicted) > 1e-3); // the check is non-vacuous
  CHECK(d.gap < 1e-3 * std::abs(d.predicted));
}

TEST_CASE("power consistency between the order-2 and order-4 models") {
  InteriorSymbol p;
  p.dim = 2;
  p.order = 0;
  p.terms.push_back({0, [](const Vec& xi) {
                       CMat m(1, 1);
                       m(0, 0) = 1.0 + 0.4 * xi[0] * xi[0] / xi.squaredNorm();
                       return m;
                     }});
  PowerReport r = power_consistency(p);
  CHECK(r.gap < 1e-4);

  // odd-order symbol: half-integer lattice on one side, quarter on the other
  InteriorSymbol podd;
  podd.dim = 2;
  podd.order = -1;
  podd.terms.push_back({-1, [](const Vec& xi) {
                          CMat m(1, 1);
                          m(0, 0) = 1.0 / xi.norm();
                          return m;
                        }});
  PowerReport ro = power_consistency(podd);
  CHECK(ro.gap < 1e-4);
}

TEST_CASE("traciality of the constant under left/right composition") {
  AuxiliaryModel md;
  LaguerreSGO g = LaguerreSGO::zero(2, 1, 0.0);
  g.c[0][0] = hom1(-1, homf(-1, 0.9));
  g.c[1][1] = hom1(-1, homf(-1, -0.3));
  AssembleOpts left;
  AssembleOpts right;
  right.density = DensityOpts{{1e-6, 12, 8, 48}, 32};
  right.min_count = 16;
  right.ratio = 1.42;
  TracialityReport t = traciality_check(g, md, left, right);
  CHECK(std::abs(t.l0_left) > 1e-3);
  CHECK(t.gap < 1e-3 * std::abs(t.l0_left));
}
