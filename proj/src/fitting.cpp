#include "zetab/fitting.hpp"

namespace zetab {

double harmonic(int N) {
  if (N < 1) throw std::domain_error("harmonic: N must be >= 1");
  double s = 0.0;
  for (int j = 1; j < N; ++j) s += 1.0 / j;
  return s;
}

RaySweep make_sweep(int N, double theta, int m, double mu0, double ratio, int count) {
  if (N < 1 || count < 2 || ratio <= 1.0 || mu0 <= 0.0)
    throw std::invalid_argument("make_sweep: bad grid parameters");
  RaySweep s;
  s.theta = theta;
  s.m = m;
  s.N = N;
  s.mu.resize(count);
  double mu = mu0;
  for (int k = 0; k < count; ++k, mu *= ratio) s.mu[k] = mu;
  return s;
}

ExpansionFit fit_expansion(const RaySweep& sweep, int sigma, int n, bool with_log,
                           const FitOpts& opts) {
  const int m = sweep.m, N = sweep.N;
  const size_t S = sweep.mu.size();
  if (sweep.values.size() != S)
    throw std::invalid_argument("fit_expansion: sweep values not filled");

  ExpansionFit fit;
  fit.N = N;
  fit.with_log = with_log;
  for (int j = 0; j < n + sigma; ++j)
    fit.exponents.push_back(double(n + sigma - j) / m - N);
  for (int k = 1; k <= opts.guard_columns; ++k)
    fit.exponents.push_back(-double(N) - double(k) / m);

  const size_t P = fit.exponents.size();
  const size_t GL = size_t(std::max(opts.guard_log_columns, 0));
  const size_t cols = P + GL + 1 + (with_log ? 1 : 0); // powers, log guards, constant, log
  if (S < 2 * cols)
    throw std::invalid_argument("fit_expansion: need at least 2x samples per unknown");
  if (sweep.mu.back() / sweep.mu.front() < 100.0)
    throw std::invalid_argument("fit_expansion: mu range must span two decades");

  // -lambda = e^{i(theta - pi)} mu^m on the principal branch
  Eigen::MatrixXcd A(S, cols);
  Eigen::VectorXcd b(S);
  for (size_t i = 0; i < S; ++i) {
    double lmu = std::log(sweep.mu[i]);
    cplx lognl = cplx(m * lmu, sweep.theta - pi);
    cplx w = std::exp(double(N) * lognl); // weight (-lambda)^N
    for (size_t j = 0; j < P; ++j) A(i, j) = w * std::exp(fit.exponents[j] * lognl);
    for (size_t k = 1; k <= GL; ++k)
      A(i, P + k - 1) =
          w * std::exp((-double(N) - double(k) / m) * lognl) * lognl;
    A(i, P + GL) = w * std::exp(-double(N) * lognl);
    if (with_log) A(i, P + GL + 1) = A(i, P + GL) * lognl;
    b(i) = w * sweep.values[i];
  }

  /* row equilibration: without it the large-mu rows (whose design entries grow
     like mu^{n+sigma}) drown the O(1) target column below the double-precision
     noise floor of the normal residual */
  for (size_t i = 0; i < S; ++i) {
    double rn = A.row(i).norm();
    if (rn == 0.0) rn = 1.0;
    A.row(i) /= rn;
    b(i) /= rn;
  }

  // column scaling, then SVD for the solve and the condition estimate
  Eigen::VectorXd scale(cols);
  for (size_t j = 0; j < cols; ++j) {
    scale(j) = A.col(j).norm();
    if (scale(j) == 0.0) scale(j) = 1.0;
    A.col(j) /= scale(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  fit.condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
  if (fit.condition > opts.max_condition)
    throw std::runtime_error("fit_expansion: design matrix condition " +
                             std::to_string(fit.condition) + " exceeds limit");
  Eigen::VectorXcd x = svd.solve(b);
  // iterative refinement recovers machine-level accuracy on this
  // moderately ill-conditioned power basis
  for (int it = 0; it < 3; ++it) x += svd.solve(Eigen::VectorXcd(b - A * x));
  fit.residual = (A * x - b).norm() / std::max(b.norm(), 1e-300);
  for (size_t j = 0; j < cols; ++j) x(j) /= scale(j);

  fit.coeffs.assign(x.data(), x.data() + P);
  fit.a_const = x(P + GL);
  if (with_log) fit.a_log = x(P + GL + 1);
  fit.l0 = fit.a_const + harmonic(N) * fit.a_log;
  return fit;
}

L0Report extract_l0(const ExpansionFit& fitN, const ExpansionFit& fitN1) {
  if (fitN1.N != fitN.N + 1)
    throw std::invalid_argument("extract_l0: fits must be at consecutive powers");
  L0Report r;
  r.l0 = fitN.l0;
  r.l0_next = fitN1.l0;
  r.difference = std::abs(r.l0 - r.l0_next);
  return r;
}

} // namespace zetab
