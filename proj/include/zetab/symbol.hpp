#ifndef ZETAB_SYMBOL_HPP
#define ZETAB_SYMBOL_HPP

#include "zetab/common.hpp"
#include "zetab/quadrature.hpp"

namespace zetab {

/* Fixed excision function: 0 for s <= 1/2, 1 for s >= 1, C^1 polynomial
   blend in between.  Only values for s >= 1 influence residues / finite
   parts structurally; fixing chi makes every number reproducible. */
double chi(double s);

/* Smooth positive substitute for |xi|: equals |xi| for |xi| >= 1, equals
   1/2 near 0 (a fixed choice among the admissible ones). */
double bracket(double s);

struct HomogeneousTerm {
  double degree; // homogeneity degree of the strictly homogeneous version
  std::function<CMat(const Vec&)> eval; // p^h, defined for xi != 0
};

/* Polyhomogeneous symbol at a frozen base point.  The realized symbol is
   sum_j chi(|xi|) p^h_j(xi) + remainder(xi). */
struct InteriorSymbol {
  double order = 0;
  int dim = 2;
  int fiber = 1;
  std::vector<HomogeneousTerm> terms; // degrees order, order-1, ...
  std::function<CMat(const Vec&)> remainder; // optional
  double remainder_decay = 0; // declared rho < -dim when remainder present
};

/* Pairs (s_{d,0}, s_{d,1}) realized as s0 + s1 * log[xi] for |xi| >= 1. */
struct LogPolySymbol {
  double order = 0;
  int dim = 2;
  int fiber = 1;
  struct Pair {
    double degree;
    std::function<CMat(const Vec&)> s0; // log-free part
    std::function<CMat(const Vec&)> s1; // coefficient of log[xi]
  };
  std::vector<Pair> terms;
};

CMat eval_symbol(const InteriorSymbol& sym, const Vec& xi);

// Fiber-traced sphere integral of one homogeneous term.
cplx sphere_trace(const HomogeneousTerm& t, int dim, int order = 128);

/* Noncommutative residue density: integral of tr p^h_{-n} over the unit
   sphere against the normalized measure; 0 when no degree -n term. */
cplx res_x(const InteriorSymbol& sym);

// Same for the log-free member of the degree -n pair.
cplx res_x0(const LogPolySymbol& sym);

struct FinitePartOpts {
  double tol = 1e-11;
  int sphere_order = 128;
};

/* Canonical trace density TR_x: term rules
     deg > -n : int_{|xi|<=1} (chi-1) p^h
     deg = -n : int_{|xi|<=1} chi p^h
     deg < -n : full-space integral of the excised term
   plus the full-space integral of the remainder; fiber trace throughout. */
cplx finite_part(const InteriorSymbol& sym, const FinitePartOpts& o = {});

} // namespace zetab

#endif
