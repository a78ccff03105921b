#pragma once

#include "yplan/instance.hpp"
#include "yplan/solution.hpp"

namespace yplan {

// Evaluates the cost terms of the objective by direct summation over the
// solution record. Transportation uses the linear form
//   sum FCT_l * ZV_{0,a,l,d}  +  sum UB_abld * VTC_abl,
// which coincides with the bilinear form on any solution satisfying the
// arc-use linking constraints. When `robust` is given, the penalty term
// gamma * sum (t^m + (phi - phi')/3) * (1 - alpha) is added; it does not
// depend on the decision variables.
ObjectiveBreakdown evaluate_objective(const PlanningInstance& inst,
                                      const PlanSolution& sol,
                                      const RobustConfig* robust = nullptr);

}  // namespace yplan
