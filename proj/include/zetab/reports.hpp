#ifndef ZETAB_REPORTS_HPP
#define ZETAB_REPORTS_HPP

#include "zetab/builtins.hpp"

#include <string>

namespace zetab {

/* JSON report builders used by the shared-library API and the command-line
   tool.  Output is deterministic: keys are emitted in sorted order and
   numbers use shortest round-trip formatting.

   Each builder returns the document and sets *pass (when given) according to
   the pinned tolerances, scaled by tolerance_scale. */

// Quadrature oracles replayed against every pinned closed form.
std::string report_verify(double tolerance_scale, bool* pass);

// Five-term constant assembly: closed forms against fitted constants.
std::string report_zeta(const ProblemConfig& cfg, double tolerance_scale, bool* pass);

/* One resolvent-power family sweep and its expansion fit; family is one of
   "interior", "leftover", "gq", "pg", "gg".  The sweep samples are included
   (mu, re, im) for CSV export. */
std::string report_fit(const ProblemConfig& cfg, const std::string& family,
                       double tolerance_scale, bool* pass);

// Constant-scaling defect against the predicted residue multiple of log c.
std::string report_defect(const ProblemConfig& cfg, double scale,
                          double tolerance_scale, bool* pass);

// Interior constant via the order-2 model against the squared order-4 model.
std::string report_power(const ProblemConfig& cfg, double tolerance_scale, bool* pass);

/* Constant of the singular Green factor composed on the left of the
   resolvent against the opposite order through the kernel route. */
std::string report_traciality(const ProblemConfig& cfg, double tolerance_scale,
                              bool* pass);

} // namespace zetab

#endif
