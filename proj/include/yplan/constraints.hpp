#pragma once

#include <vector>

#include "yplan/instance.hpp"
#include "yplan/solution.hpp"

namespace yplan {

struct CheckOptions {
  // Paper-strict mode: tours forced on every day, per-product truck flow
  // conservation dropped, and the single global big-M used everywhere.
  // Default mode waives the tour constraints on days where the solution
  // delivers nothing and uses per-constraint tightened big-M values.
  bool paper_strict = false;
  double tolerance = 1e-6;
};

// Returns one report per violated (constraint, index) pair, ordered by
// constraint id and then lexicographically by index. Empty iff feasible.
std::vector<ConstraintReport> check_constraints(const PlanningInstance& inst,
                                                const PlanSolution& sol,
                                                const RobustConfig* robust = nullptr,
                                                const CheckOptions& opts = {});

// Same result as check_constraints; constraint families are evaluated
// concurrently with OpenMP and merged in the serial order.
std::vector<ConstraintReport> check_constraints_parallel(const PlanningInstance& inst,
                                                         const PlanSolution& sol,
                                                         const RobustConfig* robust = nullptr,
                                                         const CheckOptions& opts = {});

// Total shipment of product p leaving the depot on demand day d.
double depot_shipment(const PlanningInstance& inst, const PlanSolution& sol, int p, int d);

// True when day d needs no tour constraints in default mode: the solution
// neither uses arcs nor delivers anything that day.
bool day_is_inactive(const PlanningInstance& inst, const PlanSolution& sol, int d,
                     double tolerance);

}  // namespace yplan
