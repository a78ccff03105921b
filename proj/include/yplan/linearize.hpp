#pragma once

#include <vector>

#include "yplan/instance.hpp"
#include "yplan/ndarray.hpp"
#include "yplan/solution.hpp"

namespace yplan {

// Auxiliary-variable construction replacing the bilinear transport term
// (UB * VTC) * ZV. One continuous variable ZVTC_abld per arc/vehicle/day with
//   ZVTC_abld >= VTC_abl + M * (ZV_abld - 1)   and   ZVTC_abld >= 0.
// Under minimization ZVTC settles at 0 when the arc is unused and at VTC_abl
// when it is used, so sum UB * ZVTC reproduces the bilinear cost.
struct TransportLinearization {
  double big_m = 0.0;
  int num_aux_vars = 0;  // one ZVTC per (a, b != a, l, d)

  // Lower bound implied by one arc's constraint: VTC + M * (zv - 1).
  double aux_lower_bound(const PlanningInstance& inst, int a, int b, int l, int zv) const;

  // The minimizing value of ZVTC given the arc-use indicator.
  double aux_value(const PlanningInstance& inst, int a, int b, int l, int zv) const {
    const double lb = aux_lower_bound(inst, a, b, l, zv);
    return lb > 0.0 ? lb : 0.0;
  }

  // sum UB_abld * ZVTC_abld with every ZVTC at its minimizing value.
  double linearized_cost(const PlanningInstance& inst, const PlanSolution& sol) const;
};

// Throws ValidationError if big_m is not positive.
TransportLinearization linearize_transport_term(const PlanningInstance& inst);
TransportLinearization linearize_transport_term(const PlanningInstance& inst, double big_m);

// The bilinear transport load term sum (UB * VTC) * ZV evaluated directly.
double bilinear_transport_cost(const PlanningInstance& inst, const PlanSolution& sol);

// Softened demand-coverage row: the demand side of C41 drops by slack(d,p,a)
// and the objective gains gamma * slack per softened cell.
struct SoftenedDemand {
  NdArray<double> effective_demand;  // [d][p][a], max(0, Demand - slack) clamp not applied
  double penalty = 0.0;              // gamma * sum of slacks over customers
};

// Throws ValidationError when alpha lies outside [0, 1].
SoftenedDemand robustify_demand_constraint(const PlanningInstance& inst,
                                           const RobustConfig& robust);

}  // namespace yplan
