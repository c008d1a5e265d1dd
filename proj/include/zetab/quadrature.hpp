#ifndef ZETAB_QUADRATURE_HPP
#define ZETAB_QUADRATURE_HPP

#include "zetab/common.hpp"

namespace zetab {

struct GLRule {
  std::vector<double> x; // nodes on [-1,1]
  std::vector<double> w;
};

// Gauss-Legendre rule of order n (cached; Newton iteration on P_n).
const GLRule& gl_rule(int n);

struct QuadOpts {
  double tol = 1e-12;       // absolute-ish tolerance (relative to running magnitude)
  int order = 16;           // base panel order; error check against order*2
  int max_depth = 14;
  int max_segments = 64;    // for infinite intervals
};

namespace detail {

template <class F>
auto gl_panel(F&& f, double a, double b, int n) {
  const GLRule& r = gl_rule(n);
  double h = 0.5 * (b - a), m = 0.5 * (a + b);
  auto acc = f(m + h * r.x[0]);
  acc = acc * (h * r.w[0]);
  for (size_t i = 1; i < r.x.size(); ++i) acc += f(m + h * r.x[i]) * (h * r.w[i]);
  return acc;
}

// coarse L1 estimate int |f|, used as the error scale (robust under
// cancellation in the integral itself)
template <class F>
double gl_l1(F&& f, double a, double b, int n) {
  const GLRule& r = gl_rule(n);
  double h = 0.5 * (b - a), m = 0.5 * (a + b);
  double acc = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) acc += mag(f(m + h * r.x[i])) * (h * r.w[i]);
  return acc;
}

template <class F, class T>
void adapt(F& f, double a, double b, const QuadOpts& o, int depth, T& sum, double scale) {
  T c1 = gl_panel(f, a, b, o.order);
  T c2 = gl_panel(f, a, b, 2 * o.order);
  double err = mag(T(c2 - c1));
  if (err <= o.tol * std::max(1e-300, scale) || depth >= o.max_depth) {
    sum += c2;
    return;
  }
  double m = 0.5 * (a + b);
  adapt(f, a, m, o, depth + 1, sum, scale);
  adapt(f, m, b, o, depth + 1, sum, scale);
}

} // namespace detail

// Adaptive integral over the finite interval [a,b].
template <class F>
auto integrate(F&& f, double a, double b, const QuadOpts& o = {}) {
  using T = decltype(f(a));
  T sum = zero_like(f(0.5 * (a + b)));
  detail::adapt(f, a, b, o, 0, sum, detail::gl_l1(f, a, b, o.order));
  return sum;
}

/* Integral over [a, infinity): doubling segments until two consecutive
   segments contribute below tolerance relative to the running magnitude
   (the larger of the accumulated total and the peak segment, so small-valued
   integrals are still resolved relatively). */
template <class F>
auto integrate_halfline(F&& f, double a, const QuadOpts& o = {}) {
  using T = decltype(f(a + 1.0));
  double left = a, width = 1.0;
  T total = zero_like(f(a + 0.5));
  double peak = 0.0;
  int quiet = 0;
  for (int s = 0; s < o.max_segments; ++s) {
    T seg = integrate(f, left, left + width, o);
    total += seg;
    peak = std::max(peak, mag(seg));
    double rel = mag(seg) / std::max(1e-300, std::max(peak, mag(total)));
    if (rel < o.tol) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    left += width;
    if (s >= 2) width *= 2.0;
  }
  return total;
}

template <class F>
auto integrate_realline(F&& f, const QuadOpts& o = {}) {
  auto pos = integrate_halfline(f, 0.0, o);
  auto neg = integrate_halfline([&](double t) { return f(-t); }, 0.0, o);
  return pos + neg;
}

/* Integral over the unit sphere in R^n against the normalized measure
   (2 pi)^{-n} dS.  n=1: two-point set, n=2: trapezoid on the circle
   (spectrally accurate), n=3: product Gauss rule. */
template <class F>
auto sphere_integral(F&& f, int n, int order = 64) {
  if (n == 1) {
    Vec p(1), m(1);
    p << 1.0;
    m << -1.0;
    return (f(p) + f(m)) * (1.0 / (2.0 * pi));
  }
  if (n == 2) {
    Vec v(2);
    v << 1.0, 0.0;
    auto acc = zero_like(f(v));
    for (int k = 0; k < order; ++k) {
      double th = 2.0 * pi * k / order;
      v << std::cos(th), std::sin(th);
      acc += f(v);
    }
    return acc * (2.0 * pi / order / std::pow(2.0 * pi, 2));
  }
  if (n == 3) {
    const GLRule& r = gl_rule(order);
    Vec v(3);
    v << 0.0, 0.0, 1.0;
    auto acc = zero_like(f(v));
    int nphi = 2 * order;
    for (size_t i = 0; i < r.x.size(); ++i) {
      double ct = r.x[i], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int k = 0; k < nphi; ++k) {
        double ph = 2.0 * pi * k / nphi;
        v << st * std::cos(ph), st * std::sin(ph), ct;
        acc += f(v) * (r.w[i] * (2.0 * pi / nphi));
      }
    }
    return acc * (1.0 / std::pow(2.0 * pi, 3));
  }
  throw std::invalid_argument("sphere_integral: dimension must be 1, 2 or 3");
}

/* Taylor coefficients f^{(k)}(z0)/k! for k=0..K via the trapezoid rule on a
   circle of radius rho (spectral accuracy for analytic f).  Independent
   cross-check for the Jet evaluation path. */
template <class F>
std::vector<cplx> cauchy_taylor(F&& f, cplx z0, int K, double rho, int nodes = 64) {
  std::vector<cplx> fv(nodes);
  for (int j = 0; j < nodes; ++j) {
    double th = 2.0 * pi * j / nodes;
    fv[j] = f(z0 + rho * std::exp(cplx(0, th)));
  }
  std::vector<cplx> out(K + 1);
  for (int k = 0; k <= K; ++k) {
    cplx s(0);
    for (int j = 0; j < nodes; ++j) {
      double th = 2.0 * pi * j / nodes;
      s += fv[j] * std::exp(cplx(0, -k * th));
    }
    out[k] = s / (double(nodes) * std::pow(rho, k));
  }
  return out;
}

} // namespace zetab

#endif
