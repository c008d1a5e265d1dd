#ifndef ZETAB_BUILTINS_HPP
#define ZETAB_BUILTINS_HPP

#include "zetab/assembly.hpp"

#include <string>

namespace zetab {

/* Declarative problem description: the auxiliary model, a rational interior
   symbol, a Laguerre singular Green family, and sweep/assembly options,
   all read from a single JSON document.

   Schema (all fields optional unless noted):
     model:  { "m": 2, "c": 1.0, "theta_over_pi": 1.0 }
     dim:    2 or 3
     p:      { "order": 0,
               "poly":  [ { "deg": 0, "a": 0.4, "b": 0.0, "j": 0 } ],
               "poles": [ { "qdeg": 0, "a": 0.7, "b": 0.0, "sign": 1, "k": 1 } ] }
     g:      { "L": 2, "order": 0,
               "coeffs": [ { "l": 0, "m": 0, "deg": -1, "a": 0.8, "b": 0.0 } ] }
     sweep:  { "mu0": 32.0, "ratio": 1.35, "count": 24 }
     fit:    { "guard_columns": 5, "guard_log_columns": 2 }
   Scalar coefficients are |xi'|^deg (a + b * omega_1) with omega_1 the first
   component of the unit direction. */
struct ProblemConfig {
  int dim = 2;
  AuxiliaryModel model;
  RationalSymbol p;
  LaguerreSGO g = LaguerreSGO::zero(2, 0);
  AssembleOpts opts;
};

ProblemConfig parse_config(const std::string& json_text);

// the generic fixture used by the test and acceptance suites
std::string builtin_config_json();

} // namespace zetab

#endif
