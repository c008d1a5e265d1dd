#ifndef ZETAB_LAGUERRE_HPP
#define ZETAB_LAGUERRE_HPP

#include "zetab/common.hpp"

namespace zetab {

/* Fourier-transformed Laguerre-type functions
     phihat_l(r, xi) = sqrt(2r) (r - i xi)^l / (r + i xi)^{l+1},
   an orthonormal basis of the Fourier image of L2(R+) with respect to the
   measure dxi / (2 pi). */
inline cplx phihat(int l, double r, double xi) {
  if (r <= 0) throw std::domain_error("phihat: scale must be positive");
  cplx num(r, -xi), den(r, xi);
  cplx b = num / den; // |b| = 1
  cplx bl(1, 0);
  for (int i = 0; i < l; ++i) bl *= b;
  return std::sqrt(2.0 * r) * bl / den;
}

// Laguerre polynomial L_l(x) by the three-term recurrence.
inline double laguerre_poly(int l, double x) {
  if (l == 0) return 1.0;
  double p0 = 1.0, p1 = 1.0 - x;
  for (int k = 1; k < l; ++k) {
    double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/* The x-space functions phi_l(r,x) = (-1)^l sqrt(2r) e^{-rx} L_l(2rx),
   orthonormal in L2(R+, dx); phihat_l is their Fourier transform. */
inline double phix(int l, double r, double x) {
  double sgn = (l % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::sqrt(2.0 * r) * std::exp(-r * x) * laguerre_poly(l, 2.0 * r * x);
}

/* Exponential moments a_l(r,kappa) = int_0^infty phi_l(r,x) e^{-kappa x} dx
     = (-1)^l sqrt(2r) (kappa - r)^l / (kappa + r)^{l+1},
   valid for Re kappa > 0; T may be cplx or Jet. */
template <class T>
T laguerre_moment(int l, double r, const T& kappa) {
  T num = kappa - cplx(r);
  T den = kappa + cplx(r);
  T acc = reciprocal(den);
  T ratio = num * acc;
  T out = acc;
  for (int i = 0; i < l; ++i) out = out * ratio;
  double sgn = (l % 2 == 0) ? 1.0 : -1.0;
  return out * cplx(sgn * std::sqrt(2.0 * r));
}

/* Correlation of two basis functions along a shifted diagonal:
     int_0^infty phi_l(r,y) phi_m(r,y+t) dy
       = (-1)^{l+m} e^{-r t} sum_{d=0}^{m} c_d (2 r t)^d,   t >= 0,
   with the coefficients returned here (c_0..c_m); for t < 0 swap l and m and
   flip the sign of t.  Derived by expanding L_m(u + s) binomially and using
   int_0^infty u^q e^{-u} du = q!. */
inline std::vector<double> laguerre_corr_coeffs(int l, int m) {
  auto lag = [](int n) {
    // coefficients of L_n: (-1)^k binom(n,k) / k!
    std::vector<double> a(n + 1);
    double binom = 1.0, kfac = 1.0;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        binom *= double(n - k + 1) / k;
        kfac *= k;
      }
      a[k] = ((k % 2 == 0) ? 1.0 : -1.0) * binom / kfac;
    }
    return a;
  };
  std::vector<double> a = lag(m), b = lag(l);
  std::vector<double> fact(l + m + 1, 1.0);
  for (int q = 1; q <= l + m; ++q) fact[q] = fact[q - 1] * q;
  std::vector<double> c(m + 1, 0.0);
  for (int d = 0; d <= m; ++d) {
    double binom = 1.0; // binom(k, d), starting at k = d
    for (int k = d; k <= m; ++k) {
      if (k > d) binom *= double(k) / (k - d);
      double inner = 0.0;
      for (int p = 0; p <= l; ++p) inner += b[p] * fact[p + k - d];
      c[d] += a[k] * binom * inner;
    }
  }
  return c;
}

} // namespace zetab

#endif
