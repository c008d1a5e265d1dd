#ifndef ZETAB_COMMON_HPP
#define ZETAB_COMMON_HPP

#include <complex>
#include <vector>
#include <functional>
#include <stdexcept>
#include <cmath>
#include <Eigen/Dense>

namespace zetab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// magnitude usable by the generic quadrature routines
inline double mag(double x) { return std::abs(x); }
inline double mag(const cplx& x) { return std::abs(x); }
inline double mag(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

// generic 1/x usable by templates that also accept Jet arguments
inline cplx reciprocal(const cplx& z) { return cplx(1.0) / z; }

inline CMat zero_like(const CMat& m) { return CMat::Zero(m.rows(), m.cols()); }
inline cplx zero_like(const cplx&) { return cplx(0.0, 0.0); }
inline double zero_like(double) { return 0.0; }

} // namespace zetab

#endif
