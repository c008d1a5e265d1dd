#include "zetab/logtransform.hpp"

#include "zetab/closedforms.hpp"

namespace zetab {

cplx contour_log_poles(const std::function<cplx(cplx)>& f, const ContourOpts& o) {
  const QuadOpts& q = o.quad;
  // both legs together: the log jump across the negative axis leaves 2 pi i f(-x)
  cplx legs = integrate([&](double lx) {
    double x = std::exp(lx);
    return cplx(0, 2.0 * pi) * f(cplx(-x)) * x; // log-substituted measure
  }, std::log(o.r0), std::log(o.R), q);
  // inner circle, clockwise
  cplx inner = -integrate([&](double th) {
    cplx lam = o.r0 * std::exp(cplx(0, th));
    return (cplx(std::log(o.r0), th)) * f(lam) * cplx(0, 1) * lam;
  }, -pi, pi, q);
  // outer circle, counterclockwise
  cplx outer = integrate([&](double th) {
    cplx lam = o.R * std::exp(cplx(0, th));
    return (cplx(std::log(o.R), th)) * f(lam) * cplx(0, 1) * lam;
  }, -pi, pi, q);
  return cplx(0, 1) / (2.0 * pi) * (legs + inner + outer);
}

cplx contour_log_cut(const std::function<cplx(cplx)>& f, double b, const ContourOpts& o) {
  if (b <= 0) throw std::domain_error("contour_log_cut: branch point must be positive");
  const QuadOpts& q = o.quad;
  cplx ephi = std::exp(cplx(0, o.alpha));
  /* The rays are anchored a hair to the left of the declared branch point:
     the family computes its own branch point in floating point, and anchoring
     exactly on it leaves an unresolved square-root feature of width ~1e-8.
     With the shift the feature sits near uc and is smooth, so geometrically
     refined starting panels capture it to quadrature accuracy. */
  double beff = b * (1.0 - 1e-10);
  double uc = std::sqrt(1e-10 * b);
  auto side = [&](int sgn) {
    cplx dir = (sgn > 0) ? ephi : std::conj(ephi);
    auto g = [&](double u) {
      cplx lam = beff + u * u * dir;
      return std::log(lam) * f(lam) * dir * (2.0 * u);
    };
    cplx acc = integrate(g, 0.0, uc / 32.0, q);
    double lo = uc / 32.0;
    while (lo < 32.0 * uc) {
      double hi = 1.6 * lo;
      acc += integrate(g, lo, hi, q);
      lo = hi;
    }
    acc += integrate_halfline(g, lo, q);
    return acc;
  };
  return cplx(0, 1) / (2.0 * pi) * (side(-1) - side(+1));
}

cplx contour_log_jump(const std::function<cplx(cplx)>& f, double b, const ContourOpts& o) {
  if (b <= 0) throw std::domain_error("contour_log_jump: branch point must be positive");
  const double eps = 1e-300; // push evaluation onto the correct side of the cut
  return cplx(0, 1) / (2.0 * pi) *
         integrate_halfline([&](double u) {
           double t = b + u * u;
           cplx jump = f(cplx(t, -eps)) - f(cplx(t, eps));
           return std::log(t) * jump * (2.0 * u);
         }, 0.0, o.quad);
}

cplx contour_log(const std::function<cplx(cplx)>& f, const CurveSpec& spec) {
  if (spec.spectral_cut) return contour_log_cut(f, spec.cut_start, spec.opts);
  return contour_log_poles(f, spec.opts);
}

KernelSGO glog_kernel(const AuxiliaryModel& md, bool dirichlet) {
  if (md.m != 2) throw std::domain_error("glog_kernel: second-order model only");
  KernelSGO g;
  g.dim = 2; // placeholder; profile only depends on |xi'|
  double sgn = dirichlet ? 1.0 : -1.0;
  auto profile = [sgn](const Vec& xip, double u) {
    if (u <= 0) throw std::domain_error("glog kernel evaluated on its singularity");
    double r = bracket(xip.norm());
    return cplx(sgn * std::exp(-r * u) / u);
  };
  g.sum_profile = profile;
  g.kernel = [profile](const Vec& xip, double x, double y) { return profile(xip, x + y); };
  g.singular = true;
  return g;
}

LogPolySymbol log_symbol(const AuxiliaryModel& md, int dim) {
  LogPolySymbol s;
  s.dim = dim;
  s.order = 0;
  double m = md.m, lc = std::log(md.c);
  LogPolySymbol::Pair p;
  p.degree = 0;
  p.s0 = [lc](const Vec&) { CMat v(1, 1); v(0, 0) = lc; return v; };
  p.s1 = [m](const Vec&) { CMat v(1, 1); v(0, 0) = m; return v; };
  s.terms.push_back(p);
  return s;
}

LogPolySymbol mul_log_symbol(const InteriorSymbol& p, const AuxiliaryModel& md) {
  if (p.remainder)
    throw std::invalid_argument("mul_log_symbol: classical symbols only");
  LogPolySymbol s;
  s.dim = p.dim;
  s.fiber = p.fiber;
  s.order = p.order;
  double m = md.m, lc = std::log(md.c);
  for (const auto& t : p.terms) {
    LogPolySymbol::Pair pr;
    pr.degree = t.degree;
    auto ev = t.eval;
    pr.s0 = [ev, lc](const Vec& xi) { return CMat(lc * ev(xi)); };
    pr.s1 = [ev, m](const Vec& xi) { return CMat(m * ev(xi)); };
    s.terms.push_back(pr);
  }
  return s;
}

LogPolySymbol ltrace_leftover(const RationalSymbol& p, const AuxiliaryModel& md) {
  if (md.m != 2) throw std::domain_error("ltrace_leftover: second-order model only");
  LogPolySymbol s;
  s.dim = p.dim - 1;
  s.order = p.order;
  std::vector<double> degs;
  for (const auto& t : p.poles) {
    if (t.sign != +1) continue;
    double d = t.qdeg - t.k;
    bool seen = false;
    for (double e : degs)
      if (std::abs(d - e) < 1e-9) seen = true;
    if (!seen) degs.push_back(d);
  }
  for (double d : degs) {
    std::vector<PoleTerm> sel;
    for (const auto& t : p.poles)
      if (t.sign == +1 && std::abs(t.qdeg - t.k - d) < 1e-9) sel.push_back(t);
    LogPolySymbol::Pair pr;
    pr.degree = d;
    pr.s0 = [sel](const Vec& xip) {
      double rho = xip.norm();
      cplx acc(0);
      for (const auto& t : sel) acc -= t.q(xip) / std::pow(2.0 * rho, t.k);
      CMat m(1, 1);
      m(0, 0) = acc;
      return m;
    };
    s.terms.push_back(pr);
  }
  return s;
}

LogPolySymbol s_off_symbol(const LaguerreSGO& g, const AuxiliaryModel& md,
                           bool include_diagonal) {
  if (md.m != 2) throw std::domain_error("s_off_symbol: second-order model only");
  LogPolySymbol s;
  s.dim = g.dim - 1;
  s.order = g.order;
  double lc = std::log(md.c);
  std::vector<double> degs;
  auto note = [&](double d) {
    for (double e : degs)
      if (std::abs(d - e) < 1e-9) return;
    degs.push_back(d);
  };
  for (int l = 0; l <= g.L; ++l)
    for (int m = 0; m <= g.L; ++m) {
      if (l == m && !include_diagonal) continue;
      if (g.c[l][m].remainder)
        throw std::invalid_argument("s_off_symbol: remainder coefficients unsupported");
      for (const auto& t : g.c[l][m].terms) note(t.degree);
    }
  for (double d : degs) {
    struct Piece { std::function<CMat(const Vec&)> f; double w; };
    std::vector<Piece> offp, diagp;
    for (int l = 0; l <= g.L; ++l)
      for (int m = 0; m <= g.L; ++m) {
        if (l == m && !include_diagonal) continue;
        for (const auto& t : g.c[l][m].terms) {
          if (std::abs(t.degree - d) > 1e-9) continue;
          if (l == m)
            diagp.push_back({t.eval, 1.0});
          else
            offp.push_back({t.eval, laguerre_log_offdiag(std::abs(l - m))});
        }
      }
    LogPolySymbol::Pair pr;
    pr.degree = d;
    pr.s0 = [offp, diagp, lc](const Vec& xip) {
      CMat m = CMat::Zero(1, 1);
      for (const auto& p : offp) m += p.w * p.f(xip);
      for (const auto& p : diagp) m += (2.0 * std::log(2.0) + lc) * p.f(xip);
      return m;
    };
    if (include_diagonal && !diagp.empty())
      pr.s1 = [diagp](const Vec& xip) {
        CMat m = CMat::Zero(1, 1);
        for (const auto& p : diagp) m += 2.0 * p.f(xip);
        return m;
      };
    s.terms.push_back(pr);
  }
  return s;
}

CMat eval_logpoly(const LogPolySymbol& s, const Vec& xi) {
  CMat acc = CMat::Zero(s.fiber, s.fiber);
  double r = xi.norm();
  double c = chi(r);
  if (c <= 0.0) return acc;
  double lb = std::log(bracket(r));
  for (const auto& p : s.terms) {
    if (p.s0) acc += c * p.s0(xi);
    if (p.s1) acc += c * lb * p.s1(xi);
  }
  return acc;
}

} // namespace zetab
