#ifndef ZETAB_LOGTRANSFORM_HPP
#define ZETAB_LOGTRANSFORM_HPP

#include "zetab/model.hpp"
#include "zetab/sgo.hpp"

namespace zetab {

/* Contour log-transform s = (i/2pi) oint_C log(lambda) f(lambda) dlambda,
   with C encircling the spectral region counterclockwise and the log branch
   cut on the negative real axis.

   Two realizations:
   - pole mode: a closed keyhole (two legs hugging the negative axis, inner
     circle of radius r0, outer circle of radius R).  Exact at finite R for
     f meromorphic inside, so no tail issue.
   - cut mode: C collapsed onto the spectral branch cut [b, infinity) of f,
     with the two sides rotated into the resolvent set by +-alpha and a
     square-root substitution at the branch point. */
struct ContourOpts {
  double r0 = 1e-3;       // keyhole inner radius
  double R = 1e4;         // keyhole outer radius
  double alpha = pi / 2;  // ray rotation off the cut
  QuadOpts quad = {1e-12, 16, 18, 64};
};

cplx contour_log_poles(const std::function<cplx(cplx)>& f, const ContourOpts& o = {});
cplx contour_log_cut(const std::function<cplx(cplx)>& f, double cut_start,
                     const ContourOpts& o = {});

/* Cut mode with the two sides collapsed onto the cut itself:
     (i/2pi) int_b^inf log t [f(t-i0) - f(t+i0)] dt.
   Needed when each side decays only like 1/|lambda| (the divergent parts of
   the two rotated rays would cancel only in exact arithmetic). */
cplx contour_log_jump(const std::function<cplx(cplx)>& f, double cut_start,
                      const ContourOpts& o = {});

struct CurveSpec {
  bool spectral_cut = false; // false: keyhole for meromorphic families
  double cut_start = 0.0;
  ContourOpts opts;
};
cplx contour_log(const std::function<cplx(cplx)>& f, const CurveSpec& spec);

/* Log-transformed boundary kernel of the second-order model: applying the
   contour transform to the minus-type resolvent profile e^{-kappa u}/(2c kappa)
   gives -e^{-[xi']u}/u; the Dirichlet singular Green part is its negative.
   Singular (integrable) at u = 0, so plain diagonal traces are refused. */
KernelSGO glog_kernel(const AuxiliaryModel& md, bool dirichlet = true);

/* Symbol of log of the model operator: m log[xi] + log c (the classical
   part is the constant log c). */
LogPolySymbol log_symbol(const AuxiliaryModel& md, int dim);

// product p * log_symbol(model) as a log-polyhomogeneous symbol
LogPolySymbol mul_log_symbol(const InteriorSymbol& p, const AuxiliaryModel& md);

/* Normal trace of the leftover composition of a rational symbol with the
   log of the tangential model operator: for each plus-type pole term
   q(xi')(|xi'| + i xi_n)^{-k} the trace density is -q(xi')(2|xi'|)^{-k};
   polynomial and minus-type parts drop out.  Log-free over xi'. */
LogPolySymbol ltrace_leftover(const RationalSymbol& p, const AuxiliaryModel& md);

/* Extended-trace symbol of a Laguerre singular Green operator against the
   log of the tangential model operator: off-diagonal entries carry the
   constant weights (-1)^{|l-m|}/|l-m|; the diagonal (when included) carries
   2 log[xi'] + 2 log 2 + log c. */
LogPolySymbol s_off_symbol(const LaguerreSGO& g, const AuxiliaryModel& md,
                           bool include_diagonal = false);

// chi-realized value s0 + s1 log[xi] of a log-polyhomogeneous symbol
CMat eval_logpoly(const LogPolySymbol& s, const Vec& xi);

} // namespace zetab

#endif
