#ifndef ZETAB_MODEL_HPP
#define ZETAB_MODEL_HPP

#include "zetab/common.hpp"
#include "zetab/jet.hpp"

namespace zetab {

/* Auxiliary elliptic comparison family: principal symbol c |xi|^m with
   spectral parameter lambda on the ray lambda = e^{i theta} mu^m.  The
   second-order case (m = 2) additionally carries the half-space Dirichlet
   realization used by the boundary terms. */
struct AuxiliaryModel {
  int m = 2;
  double c = 1.0;
  double theta = pi; // ray of lambda; default: the negative real axis
};

inline cplx lambda_on_ray(const AuxiliaryModel& md, double mu) {
  return std::exp(cplx(0, md.theta)) * std::pow(mu, md.m);
}

// resolvent symbol (c |xi|^m - lambda)^{-1}; T is cplx or Jet
template <class T>
T resolvent_symbol(const AuxiliaryModel& md, double xinorm, const T& lam) {
  return reciprocal(cplx(md.c * std::pow(xinorm, md.m)) - lam);
}

/* kappa(xi', lambda) = sqrt(|xi'|^2 - lambda/c), principal branch; on the
   resolvent ray Re kappa > 0.  Second-order model only. */
template <class T>
T model_kappa(const AuxiliaryModel& md, double rho, const T& lam) {
  if (md.m != 2) throw std::domain_error("model_kappa: second-order model only");
  return sqrt(cplx(rho * rho) - lam * (1.0 / md.c));
}

/* Full-line resolvent kernel at frozen xi': k(s) = e^{-kappa |s|}/(2 c kappa). */
template <class T>
T model_line_kernel(const AuxiliaryModel& md, double rho, const T& lam, double s) {
  T kap = model_kappa(md, rho, lam);
  return exp(kap * cplx(-std::abs(s))) * reciprocal(kap * cplx(2.0 * md.c));
}

/* Minus-type boundary factor profile: g~(x,y) = f(x+y) with
   f(u) = e^{-kappa u}/(2 c kappa); the Dirichlet singular Green part is its
   negative, so the Dirichlet resolvent kernel is k(x-y) - f(x+y). */
template <class T>
T model_minus_profile(const AuxiliaryModel& md, double rho, const T& lam, double u) {
  T kap = model_kappa(md, rho, lam);
  return exp(kap * cplx(-u)) * reciprocal(kap * cplx(2.0 * md.c));
}

template <class T>
T dirichlet_green_profile(const AuxiliaryModel& md, double rho, const T& lam, double u) {
  return -model_minus_profile(md, rho, lam, u);
}

} // namespace zetab

#endif
