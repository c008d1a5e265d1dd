#include "zetab/symbol.hpp"

namespace zetab {

double chi(double s) {
  if (s <= 0.5) return 0.0;
  if (s >= 1.0) return 1.0;
  double u = 2.0 * s - 1.0;
  return u * u * (3.0 - 2.0 * u);
}

double bracket(double s) {
  double c = chi(s);
  return 0.5 * (1.0 - c) + c * s;
}

CMat eval_symbol(const InteriorSymbol& sym, const Vec& xi) {
  CMat acc = CMat::Zero(sym.fiber, sym.fiber);
  double r = xi.norm();
  double c = chi(r);
  if (c > 0.0) {
    for (const auto& t : sym.terms) acc += c * t.eval(xi);
  }
  if (sym.remainder) acc += sym.remainder(xi);
  return acc;
}

cplx sphere_trace(const HomogeneousTerm& t, int dim, int order) {
  return sphere_integral([&](const Vec& w) { return t.eval(w).trace(); }, dim, order);
}

static const HomogeneousTerm* find_degree(const InteriorSymbol& sym, double d) {
  for (const auto& t : sym.terms)
    if (std::abs(t.degree - d) < 1e-9) return &t;
  return nullptr;
}

cplx res_x(const InteriorSymbol& sym) {
  const HomogeneousTerm* t = find_degree(sym, -double(sym.dim));
  if (!t) return cplx(0);
  return sphere_trace(*t, sym.dim);
}

cplx res_x0(const LogPolySymbol& sym) {
  for (const auto& p : sym.terms) {
    if (std::abs(p.degree + sym.dim) < 1e-9) {
      if (!p.s0) return cplx(0);
      return sphere_integral([&](const Vec& w) { return p.s0(w).trace(); }, sym.dim);
    }
  }
  return cplx(0);
}

cplx finite_part(const InteriorSymbol& sym, const FinitePartOpts& o) {
  const int n = sym.dim;
  QuadOpts q;
  q.tol = o.tol;
  cplx total(0);
  for (const auto& t : sym.terms) {
    cplx sph = sphere_trace(t, n, o.sphere_order);
    double a = t.degree + n; // radial exponent offset
    cplx rad;
    if (a > 1e-9) {
      rad = integrate([&](double r) { return (chi(r) - 1.0) * std::pow(r, a - 1.0); }, 0.0, 1.0, q);
    } else if (std::abs(a) <= 1e-9) {
      rad = integrate([&](double r) { return chi(r) / r; }, 0.0, 1.0, q);
    } else {
      rad = integrate_halfline([&](double r) { return chi(r) * std::pow(r, a - 1.0); }, 0.0, q);
    }
    total += sph * rad;
  }
  if (sym.remainder) {
    if (!(sym.remainder_decay < -double(n)))
      throw std::invalid_argument("finite_part: remainder decay exponent must be < -dim");
    // radial x sphere quadrature of the remainder; declared decay bounds the tail
    double Rmax = 1.0;
    cplx rem(0);
    auto shell = [&](double r) {
      cplx s = sphere_integral(
          [&](const Vec& w) { return sym.remainder(Vec(r * w)).trace(); }, n, o.sphere_order);
      return s * std::pow(r, n - 1.0);
    };
    double width = 1.0, left = 0.0;
    for (int seg = 0; seg < 64; ++seg) {
      rem += integrate(shell, left, left + width, q);
      left += width;
      if (seg >= 2) width *= 2.0;
      Rmax = left;
      // tail bound from the declared decay: C r^rho with C estimated at Rmax
      double surf = (n == 1) ? 2.0 : (n == 2 ? 2.0 * pi : 4.0 * pi);
      double cest = 0.0;
      cest = std::abs(sphere_integral([&](const Vec& w) {
               return cplx(mag(sym.remainder(Vec(Rmax * w))), 0.0);
             }, n, 32)) * std::pow(2.0 * pi, n) / surf * std::pow(Rmax, -sym.remainder_decay);
      double tail = cest * std::pow(2.0 * pi, -double(n)) * surf *
                    std::pow(Rmax, sym.remainder_decay + n) / (-sym.remainder_decay - n);
      if (tail < o.tol * std::max(1.0, std::abs(total + rem))) break;
      if (seg == 63)
        throw std::runtime_error("finite_part: remainder tail bound not met");
    }
    total += rem;
  }
  return total;
}

} // namespace zetab
