#ifndef ZETAB_FITTING_HPP
#define ZETAB_FITTING_HPP

#include "zetab/common.hpp"

namespace zetab {

// harmonic number sum_{1 <= j < N} 1/j
double harmonic(int N);

/* Samples of a trace-density family along the ray lambda = e^{i theta} mu^m,
   mu on a geometric grid. */
struct RaySweep {
  double theta = pi;
  int m = 2;
  int N = 1;
  std::vector<double> mu;
  std::vector<cplx> values;
};

// geometric mu grid; values left empty for the caller to fill
RaySweep make_sweep(int N, double theta = pi, int m = 2, double mu0 = 4.0,
                    double ratio = 1.35, int count = 24);

struct FitOpts {
  /* extra power columns below the constant-order term, spaced 1/m apart, that
     absorb the leading remainder contamination */
  int guard_columns = 3;
  /* log-bearing guard columns (-lambda)^{-N-k/m} log(-lambda): the excision
     cutoff of a degree -n coefficient generates such terms */
  int guard_log_columns = 0;
  double max_condition = 1e10;
};

/* Result of fitting a sweep against
     sum_j a_j (-lambda)^{e_j} + (a_log log(-lambda) + a_const)(-lambda)^{-N}
   with e_j = (n + sigma - j)/m - N, 0 <= j < n + sigma. */
struct ExpansionFit {
  int N = 1;
  bool with_log = true;
  std::vector<double> exponents; // power columns, guard columns at the tail
  std::vector<cplx> coeffs;
  cplx a_log{0};   // coefficient of (-lambda)^{-N} log(-lambda)
  cplx a_const{0}; // coefficient of (-lambda)^{-N}
  cplx l0{0};      // a_const + harmonic(N) * a_log
  double residual = 0.0;  // weighted residual relative to the weighted data norm
  double condition = 0.0; // of the column-scaled design matrix
};

/* Weighted complex linear least squares with the known exponent basis.
   Weights (-lambda)^N equalize the target scale across the grid.  Throws if
   the scaled design matrix is worse conditioned than opts.max_condition. */
ExpansionFit fit_expansion(const RaySweep& sweep, int sigma, int n,
                           bool with_log = true, const FitOpts& opts = {});

/* The N-independence check of Definition-1.2 type: extract l0 at two
   consecutive powers and report the difference. */
struct L0Report {
  cplx l0;          // from the lower-N fit
  cplx l0_next;     // from the higher-N fit
  double difference;
};
L0Report extract_l0(const ExpansionFit& fitN, const ExpansionFit& fitN1);

} // namespace zetab

#endif
