#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetab/closedforms.hpp"
#include "zetab/quadrature.hpp"

using namespace zetab;

TEST_CASE("Blaschke-pole fiber integrals vs quadrature") {
  double r = 1.3;
  cplx kap(0.9, 0.5);
  for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 0}, {2, 2}, {3, 1}, {1, 3}, {5, 2}}) {
    for (int sign : {+1, -1}) {
      cplx direct = integrate_realline([&](double x) {
        cplx B = cplx(r, -x) / cplx(r, x);
        cplx blaschke = std::pow(B, l - m);
        return blaschke / (r * r + x * x) / (kap + cplx(0, sign * x));
      }) / (2.0 * pi);
      cplx closed = blaschke_pole_integral(l, m, r, kap, sign);
      CHECK(std::abs(closed - direct) < 1e-10);
    }
  }
}

TEST_CASE("radial integrals: diagonal and off-diagonal closed forms") {
  for (cplx a : {cplx(0.8, 0.0), cplx(2.5, 0.0), cplx(1.1, 0.4)}) {
    cplx direct = integrate_halfline([&](double s) {
      double r = 1.0 + s;
      cplx w = std::sqrt(r * r + a * a);
      return 1.0 / (r * w * (w + r));
    }, 0.0);
    CHECK(std::abs(radial_diag_integral(a) - direct) < 1e-10);
    for (int j : {1, 2, 4}) {
      cplx djo = integrate_halfline([&](double s) {
        double r = 1.0 + s;
        cplx w = std::sqrt(r * r + a * a);
        return std::pow(w - r, j - 1) / (w * std::pow(w + r, j + 1));
      }, 0.0);
      CHECK(std::abs(radial_offdiag_integral(j, a) - djo) < 1e-10);
    }
  }
}

TEST_CASE("log-weight constants vs quadrature") {
  // int log(1+t^2)/(1+t^2) dt = -2 int log cos theta dtheta = 2 pi log 2
  double lor = -2.0 * integrate([](double th) { return std::log(std::cos(th)); },
                                -pi / 2 + 1e-13, pi / 2 - 1e-13, QuadOpts{1e-13, 24, 30, 64});
  CHECK(std::abs(lor - log_lorentzian_integral()) < 1e-9);

  for (double r : {0.7, 2.0}) {
    // diagonal: (1/2pi) int 2r log(r^2+xi^2)/(r^2+xi^2) dxi = 2 log 2 + 2 log r
    double diag = integrate([&](double th) {
      double xi = r * std::tan(th);
      return 2.0 * std::log(r * r + xi * xi) / (2.0 * pi);
    }, -pi / 2 + 1e-13, pi / 2 - 1e-13, QuadOpts{1e-13, 24, 30, 64});
    CHECK(std::abs(diag - laguerre_log_diag(r)) < 1e-9);
  }

  for (int k = 1; k <= 5; ++k) {
    cplx off = integrate([&](double th) {
      double t = std::tan(th);
      cplx B = cplx(1, -t) / cplx(1, t);
      return std::pow(B, k) * std::log(1.0 + t * t) / pi;
    }, -pi / 2 + 1e-13, pi / 2 - 1e-13, QuadOpts{1e-13, 24, 30, 64});
    CHECK(std::abs(off - cplx(laguerre_log_offdiag(k))) < 1e-9);
  }

  for (int k = 1; k <= 5; ++k) {
    double v = integrate_halfline([&](double s) {
      double t = 1.0 + s;
      return 1.0 / (t * std::pow(1.0 + t, k));
    }, 0.0);
    CHECK(std::abs(v - halfpole_log_constant(k)) < 1e-10);
  }
}

TEST_CASE("closed forms on jets match circle differentiation in lambda") {
  double r = 1.2;
  cplx lam(-3.0, 0.4);
  auto kofl = [&](cplx l) { return std::sqrt(r * r - l); };
  Jet lj = Jet::variable(lam, 4);
  Jet kj = sqrt(cplx(r * r) - lj);

  Jet f1 = blaschke_pole_integral(4, 1, r, kj, -1);
  auto c1 = cauchy_taylor([&](cplx l) {
    return blaschke_pole_integral(4, 1, r, kofl(l), -1);
  }, lam, 3, 0.5);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(f1.a[i] - c1[i]) < 1e-11);

  Jet aj = kj * cplx(1.0 / 0.8); // some affine image of kappa as "a"
  Jet f2 = radial_diag_integral(aj);
  auto c2 = cauchy_taylor([&](cplx l) {
    return radial_diag_integral(kofl(l) / 0.8);
  }, lam, 3, 0.5);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(f2.a[i] - c2[i]) < 1e-11);

  Jet f3 = radial_offdiag_integral(2, aj);
  auto c3 = cauchy_taylor([&](cplx l) {
    return radial_offdiag_integral(2, kofl(l) / 0.8);
  }, lam, 3, 0.5);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(f3.a[i] - c3[i]) < 1e-11);
}
