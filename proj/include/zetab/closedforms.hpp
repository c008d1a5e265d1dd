#ifndef ZETAB_CLOSEDFORMS_HPP
#define ZETAB_CLOSEDFORMS_HPP

#include "zetab/common.hpp"
#include "zetab/jet.hpp"

#include <numbers>

namespace zetab {

/* Closed forms for the recurring Laguerre / resolvent integrals.  Each one
   is frozen here and policed by a quadrature oracle in the tests. */

/* s^{+-}_{l,m}(r, kappa): fiber integrals
     int (r-ix)^l/(r+ix)^{l+1} * (r+ix)^m/(r-ix)^{m+1} / (kappa +- ix) dx/(2pi).
   One of the pair vanishes off the diagonal.  T is cplx or Jet. */
template <class T>
T blaschke_pole_integral(int l, int m, double r, const T& kappa, int sign) {
  if (l == m) return reciprocal((kappa + cplx(r)) * cplx(2.0 * r));
  int d = std::abs(l - m);
  bool vanishes = (l > m) ? (sign == +1) : (sign == -1);
  if (vanishes) return zero_like(kappa);
  T num = cplx(r) - kappa;
  T invden = reciprocal(cplx(r) + kappa);
  T out = invden * invden;
  T ratio = num * invden;
  for (int i = 0; i < d - 1; ++i) out = out * ratio;
  return out;
}

/* int_1^infty dr / ( r sqrt(r^2+a^2) (sqrt(r^2+a^2)+r) )
     = a^{-2} ( -log 2 + log(sqrt(1+a^2)+1) ). */
template <class T>
T radial_diag_integral(const T& a) {
  T a2 = a * a;
  return reciprocal(a2) * (log(sqrt(a2 + cplx(1)) + cplx(1)) - cplx(std::log(2.0)));
}

/* int_1^infty (sqrt(r^2+a^2)-r)^{j-1} / ( sqrt(r^2+a^2) (sqrt(r^2+a^2)+r)^{j+1} ) dr
     = (2j)^{-1} a^{-2} ( sqrt(1+a^{-2}) - a^{-1} )^{2j},  j >= 1. */
template <class T>
T radial_offdiag_integral(int j, const T& a) {
  T ainv = reciprocal(a);
  T ainv2 = ainv * ainv;
  T base = sqrt(ainv2 + cplx(1)) - ainv;
  T out = ainv2 * cplx(1.0 / (2.0 * j));
  for (int i = 0; i < 2 * j; ++i) out = out * base;
  return out;
}

// int log(1+s^2)/(1+s^2) ds over the line
inline constexpr double log_lorentzian_integral() { return 2.0 * pi * std::numbers::ln2; }

/* Frequency-diagonal weight of log(r^2 + xi_n^2) against |phihat_l|^2 / 2pi:
   equals 2 log 2 + 2 log r for every l. */
inline double laguerre_log_diag(double r) { return 2.0 * std::log(2.0) + 2.0 * std::log(r); }

/* Off-diagonal log weights: with B = (r - i xi_n)/(r + i xi_n),
     (1/pi) int B^k log(1 + (xi_n/r)^2) / (1 + (xi_n/r)^2) d(xi_n/r)
       = (-1)^k / k   (k >= 1, independent of r). */
inline double laguerre_log_offdiag(int k) {
  if (k < 1) throw std::invalid_argument("laguerre_log_offdiag: k >= 1");
  return ((k % 2 == 0) ? 1.0 : -1.0) / k;
}

/* int_1^infty dt / ( t (1+t)^k ) = log 2 - sum_{j=2}^k 2^{1-j}/(j-1); the
   constant entering the extended normal trace of a plus-type pole term
   against the boundary log kernel. */
inline double halfpole_log_constant(int k) {
  double v = std::log(2.0);
  for (int j = 2; j <= k; ++j) v -= std::pow(2.0, 1.0 - j) / (j - 1);
  return v;
}

} // namespace zetab

#endif
