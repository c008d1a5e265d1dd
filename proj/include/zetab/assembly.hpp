#ifndef ZETAB_ASSEMBLY_HPP
#define ZETAB_ASSEMBLY_HPP

#include "zetab/densities.hpp"
#include "zetab/fitting.hpp"

namespace zetab {

/* Closed-form constant term of the truncated interior part:
     TR_x(p) - 1/2 res_{x,0}(p * log of the model symbol),
   reported as a frozen-point density. */
cplx term_interior(const InteriorSymbol& p, const AuxiliaryModel& md,
                   const FinitePartOpts& o = {});

/* Closed-form constant of the leftover composition: 1/2 times the residue of
   the log-free degree 1-n part of the leftover normal trace.  Equals minus
   the constant term of the leftover resolvent family. */
cplx term_leftover(const RationalSymbol& p, const AuxiliaryModel& md,
                   int sphere_order = 128);

/* Closed-form constant of the singular-Green-times-resolvent part:
     TR_{x'}(tr_n g) - 1/2 res_{x',0}(extended trace against the log symbol).
   Two routes are evaluated: the pinned closed log-weights, and a direct
   fiber quadrature of the same weights; |difference| lands in *route_gap
   when requested (the sharpest internal consistency check). */
cplx term_gq(const LaguerreSGO& g, const AuxiliaryModel& md, double* route_gap = nullptr,
             const FinitePartOpts& o = {});

/* Closed-form constant of P_+ composed with the boundary log kernel: only
   pole terms with qdeg - k = 1-n contribute, each with the half-pole weight
   1/2 halfpole_log_constant(k); polynomial parts drop out for the flat
   model (their resolvent families are exact pure powers). */
cplx term_pg(const RationalSymbol& p, const AuxiliaryModel& md, int sphere_order = 128);

/* Closed-form constant of G composed with the boundary log kernel:
     -1/2 res_{x'} tr_n(G Glog),
   with the composition trace done by quadrature against the singular
   (integrable) kernel profile. */
cplx term_gg(const LaguerreSGO& g, const AuxiliaryModel& md, int sphere_order = 128,
             const QuadOpts& q = {});

struct AssembleOpts {
  DensityOpts density;
  /* the boundary families converge to their constants with large-amplitude
     half-power corrections (Laguerre-index binomials), so the sweep starts
     high and carries extra guard columns */
  FitOpts fit{5, 2, 1e10};
  double mu0 = 32.0;
  double ratio = 1.35;
  int min_count = 24;
  int sphere_order = 128; // for the closed-form residues / finite parts
};

enum class Family { interior, leftover, gq, pg, gg };

/* One resolvent-power family: its exponent lattice top S, iterate order N,
   the sampled sweep, and the fitted expansion. */
struct FamilySweep {
  int S = 0;
  int N = 1;
  RaySweep sweep;
  ExpansionFit fit;
};
FamilySweep run_family(Family f, const RationalSymbol& p, const LaguerreSGO& g,
                       const AuxiliaryModel& md, const AssembleOpts& o = {});

struct TermPair {
  cplx closed{0};
  cplx fitted{0};
  double gap = 0.0; // |closed - fitted|
};

/* Five-term constant-coefficient report: each closed form next to the fitted
   constant of the corresponding resolvent-family expansion, plus totals.
   The leftover term enters the totals with the sign it has in the
   decomposition (minus the constant of the leftover family). */
struct ZetaReport {
  TermPair interior, leftover, gq, pg, gg;
  ExpansionFit fits[5]; // interior, leftover, gq, pg, gg
  cplx total_closed{0};
  cplx total_fitted{0};
  double gq_route_gap = 0.0;
};

ZetaReport assemble(const RationalSymbol& p, const LaguerreSGO& g,
                    const AuxiliaryModel& md, const AssembleOpts& o = {});

/* Scaling-defect check: the fitted total for the model scaled by c minus the
   fitted total for the original model, against the closed prediction
   -1/2 log(c) (res_x(p) + res_{x'}(tr_n g)). */
struct DefectReport {
  cplx fitted_difference{0};
  cplx predicted{0};
  double gap = 0.0;
};
DefectReport defect_scaling(const RationalSymbol& p, const LaguerreSGO& g, double c,
                            const AuxiliaryModel& base = {}, const AssembleOpts& o = {});

/* Power-consistency check: the interior constant fitted with the order-2
   model versus the squared (order-4) model on its own exponent grid. */
struct PowerReport {
  cplx l0_m2{0};
  cplx l0_m4{0};
  double gap = 0.0;
};
PowerReport power_consistency(const InteriorSymbol& p, const AuxiliaryModel& base = {},
                              const AssembleOpts& o = {});

/* Traciality check for an order-0 singular Green factor: fitted constant of
   the left-composed family G Q^N_+ minus the right-composed family Q^N_+ G
   (the latter through the x-space route). */
struct TracialityReport {
  cplx l0_left{0};
  cplx l0_right{0};
  double gap = 0.0;
};
TracialityReport traciality_check(const LaguerreSGO& g, const AuxiliaryModel& md = {},
                                  const AssembleOpts& left = {},
                                  const AssembleOpts& right = {});

} // namespace zetab

#endif
