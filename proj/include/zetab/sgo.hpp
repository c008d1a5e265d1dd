#ifndef ZETAB_SGO_HPP
#define ZETAB_SGO_HPP

#include "zetab/laguerre.hpp"
#include "zetab/symbol.hpp"

namespace zetab {

/* Singular Green operator of class 0 on the model half-space, described at a
   frozen boundary point by its Laguerre coefficient symbols: the
   symbol-kernel at tangential frequency xi' is
     gtilde(xi', x, y) = sum_{l,m} c_lm(xi') phi_l([xi'], x) phi_m([xi'], y),
   with c_lm polyhomogeneous scalar symbols over R^{n-1}. */
struct LaguerreSGO {
  double order = 0; // order of the operator; c_lm degrees start at order - 1
  int dim = 2;      // interior dimension n; coefficients live over R^{n-1}
  int L = 0;
  std::vector<std::vector<InteriorSymbol>> c; // (L+1) x (L+1)

  static LaguerreSGO zero(int dim, int L, double order = 0) {
    LaguerreSGO g;
    g.order = order;
    g.dim = dim;
    g.L = L;
    g.c.assign(L + 1, std::vector<InteriorSymbol>(L + 1));
    for (auto& row : g.c)
      for (auto& s : row) s.dim = dim - 1;
    return g;
  }
};

// realized coefficient value c_lm(xi')
inline cplx sgo_coeff(const LaguerreSGO& g, int l, int m, const Vec& xip) {
  return eval_symbol(g.c[l][m], xip)(0, 0);
}

// symbol-kernel gtilde(xi', x, y)
inline cplx sgo_kernel(const LaguerreSGO& g, const Vec& xip, double x, double y) {
  double r = bracket(xip.norm());
  cplx acc(0);
  for (int l = 0; l <= g.L; ++l) {
    double plx = phix(l, r, x);
    for (int m = 0; m <= g.L; ++m) {
      cplx clm = sgo_coeff(g, l, m, xip);
      if (clm != cplx(0)) acc += clm * plx * phix(m, r, y);
    }
  }
  return acc;
}

// frequency-side symbol g(xi', xi_n, eta_n)
inline cplx sgo_symbol(const LaguerreSGO& g, const Vec& xip, double xin, double etan) {
  double r = bracket(xip.norm());
  cplx acc(0);
  for (int l = 0; l <= g.L; ++l) {
    cplx phl = phihat(l, r, xin);
    for (int m = 0; m <= g.L; ++m) {
      cplx clm = sgo_coeff(g, l, m, xip);
      if (clm != cplx(0)) acc += clm * phl * std::conj(phihat(m, r, etan));
    }
  }
  return acc;
}

/* Normal trace tr_n g (xi') = integral of the symbol-kernel on the diagonal
   = sum_l c_ll(xi') by orthonormality. */
inline cplx sgo_trn(const LaguerreSGO& g, const Vec& xip) {
  cplx acc(0);
  for (int l = 0; l <= g.L; ++l) acc += sgo_coeff(g, l, l, xip);
  return acc;
}

/* tr_n g as a polyhomogeneous symbol over R^{n-1}: collect the diagonal
   coefficient terms by degree.  Assumes plain homogeneous coefficients
   (no remainder parts). */
inline InteriorSymbol sgo_trn_symbol(const LaguerreSGO& g) {
  InteriorSymbol out;
  out.dim = g.dim - 1;
  out.order = g.order - 1;
  std::vector<double> degs;
  for (int l = 0; l <= g.L; ++l) {
    if (g.c[l][l].remainder)
      throw std::invalid_argument("sgo_trn_symbol: remainder coefficients unsupported");
    for (const auto& t : g.c[l][l].terms) {
      bool found = false;
      for (double d : degs)
        if (std::abs(d - t.degree) < 1e-9) found = true;
      if (!found) degs.push_back(t.degree);
    }
  }
  for (double d : degs) {
    std::vector<std::function<CMat(const Vec&)>> parts;
    for (int l = 0; l <= g.L; ++l)
      for (const auto& t : g.c[l][l].terms)
        if (std::abs(t.degree - d) < 1e-9) parts.push_back(t.eval);
    out.terms.push_back({d, [parts](const Vec& xi) {
                           CMat m = CMat::Zero(1, 1);
                           for (const auto& p : parts) m += p(xi);
                           return m;
                         }});
  }
  return out;
}

// diagonal / off-diagonal split of the coefficient matrix
inline std::pair<LaguerreSGO, LaguerreSGO> sgo_split_diag(const LaguerreSGO& g) {
  LaguerreSGO d = LaguerreSGO::zero(g.dim, g.L, g.order);
  LaguerreSGO o = LaguerreSGO::zero(g.dim, g.L, g.order);
  for (int l = 0; l <= g.L; ++l)
    for (int m = 0; m <= g.L; ++m)
      (l == m ? d : o).c[l][m] = g.c[l][m];
  return {d, o};
}

/* Kernel-specified singular Green family: symbol-kernel given directly as a
   function of (xi', x, y).  When the kernel depends only on x + y the
   one-variable profile may be supplied too, enabling exact composition
   shortcuts. */
struct KernelSGO {
  int dim = 2;
  std::function<cplx(const Vec&, double, double)> kernel;
  std::function<cplx(const Vec&, double)> sum_profile; // optional: kernel = f(x + y)
  bool singular = false; // integrable blow-up at x = y = 0 (diagonal trace undefined)
};

inline cplx sgo_trn(const KernelSGO& g, const Vec& xip, const QuadOpts& q = {}) {
  if (g.singular)
    throw std::domain_error("sgo_trn: kernel singular on the diagonal");
  return integrate_halfline([&](double x) { return g.kernel(xip, x, x); }, 0.0, q);
}

/* Laguerre expansion of a kernel-specified family at one tangential
   frequency: c_lm = int int kernel(x,y) phi_l(x) phi_m(y) dx dy. */
inline CMat sgo_expand(const KernelSGO& g, const Vec& xip, int L, const QuadOpts& q = {}) {
  double r = bracket(xip.norm());
  auto inner = [&](double x) {
    Eigen::VectorXcd kern(L + 1);
    for (int m = 0; m <= L; ++m)
      kern(m) = integrate_halfline(
          [&](double y) { return g.kernel(xip, x, y) * phix(m, r, y); }, 0.0, q);
    CMat out(L + 1, L + 1);
    for (int l = 0; l <= L; ++l)
      for (int m = 0; m <= L; ++m) out(l, m) = phix(l, r, x) * kern(m);
    return out;
  };
  return integrate_halfline(inner, 0.0, q);
}

/* Normal trace of the composition g1 g2 at fixed xi':
     tr_n(g1 g2) = int int g1(x,y) g2(y,x) dy dx.
   For kernels of the form f_i(x+y) this reduces exactly to
     int_0^infty u f_1(u) f_2(u) du. */
inline cplx sgo_compose_trace(const KernelSGO& g1, const KernelSGO& g2, const Vec& xip,
                              const QuadOpts& q = {}) {
  if (g1.sum_profile && g2.sum_profile) {
    return integrate_halfline(
        [&](double u) { return u * g1.sum_profile(xip, u) * g2.sum_profile(xip, u); }, 0.0, q);
  }
  auto inner = [&](double x) {
    return integrate_halfline(
        [&](double y) { return g1.kernel(xip, x, y) * g2.kernel(xip, y, x); }, 0.0, q);
  };
  return integrate_halfline(inner, 0.0, q);
}

// same composition trace through Laguerre coefficients: tr(C1 C2)
inline cplx sgo_compose_trace(const LaguerreSGO& g1, const LaguerreSGO& g2, const Vec& xip) {
  if (g1.L != g2.L || g1.dim != g2.dim)
    throw std::invalid_argument("sgo_compose_trace: incompatible truncations");
  cplx acc(0);
  for (int l = 0; l <= g1.L; ++l)
    for (int m = 0; m <= g1.L; ++m) acc += sgo_coeff(g1, l, m, xip) * sgo_coeff(g2, m, l, xip);
  return acc;
}

/* Extended normal trace of a composition with a pseudodifferential factor:
   for the diagonal symbol value d(xi_n) = g(xi', xi_n, xi_n) and the
   rational fiber symbol r(xi_n),
     tr'_n (g r) = (1/2pi) int d(xi_n) r(xi_n) d xi_n,
   the same formula serving both operator orders. */
template <class GD, class R>
cplx sgo_trprime(GD&& gdiag, R&& rfib, const QuadOpts& q = {}) {
  return integrate_realline([&](double xin) { return gdiag(xin) * rfib(xin); }, q) /
         (2.0 * pi);
}

/* Projection coefficients of a fiber function onto the span of the
   conjugated basis (the "minus" space): f ~ sum_m b_m conj(phihat_m),
     b_m = (1/2pi) int f(xi_n) phihat_m(xi_n) d xi_n. */
template <class F>
std::vector<cplx> project_minus(F&& f, double r, int L, const QuadOpts& q = {}) {
  std::vector<cplx> b(L + 1);
  for (int m = 0; m <= L; ++m)
    b[m] = integrate_realline(
               [&](double xin) { return f(xin) * phihat(m, r, xin); }, q) / (2.0 * pi);
  return b;
}

// plus-space projection: f ~ sum_l b_l phihat_l, b_l = (1/2pi) int f conj(phihat_l)
template <class F>
std::vector<cplx> project_plus(F&& f, double r, int L, const QuadOpts& q = {}) {
  std::vector<cplx> b(L + 1);
  for (int l = 0; l <= L; ++l)
    b[l] = integrate_realline(
               [&](double xin) { return f(xin) * std::conj(phihat(l, r, xin)); }, q) /
           (2.0 * pi);
  return b;
}

/* Pseudodifferential boundary-fiber symbols that are rational in the normal
   covariable: a polynomial part sum_j a_j(xi') xi_n^j plus simple-structure
   pole terms q(xi') (|xi'| + s i xi_n)^{-k}, s = +/-1.  Coefficients are
   strictly homogeneous in xi'. */
struct NormalPolyTerm {
  std::function<cplx(const Vec&)> a; // homogeneous of degree adeg over R^{n-1}
  double adeg = 0;
  int j = 0;
};
struct PoleTerm {
  std::function<cplx(const Vec&)> q; // homogeneous of degree qdeg
  double qdeg = 0;
  int sign = +1; // +1: pole at xi_n = i|xi'| (plus-type), -1: mirrored
  int k = 1;
};
struct RationalSymbol {
  double order = 0;
  int dim = 2;
  std::vector<NormalPolyTerm> poly;
  std::vector<PoleTerm> poles;
};

// strictly homogeneous value p^h(xi', xi_n)
inline cplx rational_eval(const RationalSymbol& p, const Vec& xip, double xin) {
  double rho = xip.norm();
  cplx acc(0);
  for (const auto& t : p.poly) acc += t.a(xip) * std::pow(xin, t.j);
  for (const auto& t : p.poles) {
    cplx den(rho, t.sign * xin);
    acc += t.q(xip) / std::pow(den, t.k);
  }
  return acc;
}

/* View over R^n as a polyhomogeneous interior symbol (one homogeneous term
   per rational piece; the realized form carries the usual excision). */
inline InteriorSymbol rational_as_interior(const RationalSymbol& p) {
  InteriorSymbol s;
  s.dim = p.dim;
  s.order = p.order;
  std::vector<double> degs;
  auto note = [&](double d) {
    for (double e : degs)
      if (std::abs(d - e) < 1e-9) return;
    degs.push_back(d);
  };
  for (const auto& t : p.poly) note(t.adeg + t.j);
  for (const auto& t : p.poles) note(t.qdeg - t.k);
  for (double d : degs) {
    RationalSymbol part;
    part.dim = p.dim;
    for (const auto& t : p.poly)
      if (std::abs(t.adeg + t.j - d) < 1e-9) part.poly.push_back(t);
    for (const auto& t : p.poles)
      if (std::abs(t.qdeg - t.k - d) < 1e-9) part.poles.push_back(t);
    s.terms.push_back({d, [part](const Vec& xi) {
                         int nm1 = int(xi.size()) - 1;
                         Vec xip = xi.head(nm1);
                         CMat m(1, 1);
                         m(0, 0) = rational_eval(part, xip, xi[nm1]);
                         return m;
                       }});
  }
  return s;
}

/* Leftover factor of a rational symbol.  For p with plus-type pole terms
   q (|xi'| + i xi_n)^{-k} the operator r+ P (1 - e+ r+) has, after tracing
   against a minus-type factor f(x+y), the exact sum-profile
     f_p(u) = sum_k q(xi') u^{k-1} e^{-|xi'| u} / (k-1)!.
   Polynomial and minus-type pole parts contribute nothing. */
inline KernelSGO rational_plus_factor(const RationalSymbol& p) {
  KernelSGO g;
  g.dim = p.dim;
  std::vector<PoleTerm> plus;
  for (const auto& t : p.poles)
    if (t.sign == +1) plus.push_back(t);
  auto profile = [plus](const Vec& xip, double u) {
    double rho = xip.norm();
    cplx acc(0);
    for (const auto& t : plus) {
      double fac = 1.0;
      for (int i = 2; i < t.k; ++i) fac *= i;
      acc += t.q(xip) * std::pow(u, t.k - 1) * std::exp(-rho * u) / fac;
    }
    return acc;
  };
  g.sum_profile = profile;
  g.kernel = [profile](const Vec& xip, double x, double y) { return profile(xip, x + y); };
  return g;
}

} // namespace zetab

#endif
