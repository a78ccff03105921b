#include "yplan/objective.hpp"

namespace yplan {

ObjectiveBreakdown evaluate_objective(const PlanningInstance& inst,
                                      const PlanSolution& sol,
                                      const RobustConfig* robust) {
  sol.check_dimensions(inst);

  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;

  ObjectiveBreakdown b;

  for (int p = 0; p < P; ++p)
    for (int j = 0; j < J; ++j)
      for (int i = 0; i < I; ++i)
        b.variable_production += sol.production(p, j, i) * inst.variable_cost[static_cast<std::size_t>(p)];

  for (int p = 0; p < P; ++p)
    for (int i = 0; i < I; ++i)
      b.inventory_holding += sol.inventory(p, i) * inst.inventory_cost(p, i);

  for (int r = 0; r < R; ++r)
    for (int i = 0; i < I; ++i)
      if (sol.recipe_used(r, i)) b.recipe_preparation += inst.recipe_batch_cost(r, i);

  for (int f = 0; f < F; ++f)
    for (int e = 0; e < F; ++e)
      for (int j = 0; j < J; ++j)
        for (int i = 0; i < I; ++i)
          if (sol.sequence(f, e, j, i)) b.changeover += inst.changeover_cost(f, e, j, i);

  for (int i = 0; i < I; ++i)
    b.overtime += sol.overtime[static_cast<std::size_t>(i)] * inst.overtime_cost[static_cast<std::size_t>(i)];

  for (int a = 1; a < A; ++a)
    for (int d = 0; d < D; ++d)
      for (int p = 0; p < P; ++p)
        b.unmet_demand += sol.unmet(a, d, p) * inst.unmet_cost(a, p);

  for (int j = 0; j < J; ++j)
    for (int i = 0; i < I; ++i)
      if (sol.line_used(j, i))
        b.line_utilization += inst.line_fixed_cost(j, i) + inst.line_cost(j, i);

  for (int l = 0; l < L; ++l)
    for (int d = 0; d < D; ++d) {
      for (int a = 1; a < A; ++a)
        if (sol.arc_used(0, a, l, d)) b.transportation += inst.truck_fixed_cost[static_cast<std::size_t>(l)];
      for (int a = 0; a < A; ++a)
        for (int bb = 0; bb < A; ++bb)
          if (a != bb)
            b.transportation += sol.arc_flow(a, bb, l, d) * inst.transport_cost(a, bb, l);
    }

  if (robust != nullptr) {
    robust->validate(inst);
    double slack_total = 0.0;
    for (int d = 0; d < D; ++d)
      for (int p = 0; p < P; ++p)
        for (int a = 1; a < A; ++a) slack_total += robust->slack(d, p, a);
    b.robust_penalty = robust->gamma * slack_total;
  }

  b.total = b.sum_of_terms();
  return b;
}

}  // namespace yplan
