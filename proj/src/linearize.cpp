#include "yplan/linearize.hpp"

#include <algorithm>

#include "yplan/errors.hpp"

namespace yplan {

double TransportLinearization::aux_lower_bound(const PlanningInstance& inst, int a, int b, int l,
                                               int zv) const {
  return inst.transport_cost(a, b, l) + big_m * (static_cast<double>(zv) - 1.0);
}

double TransportLinearization::linearized_cost(const PlanningInstance& inst,
                                               const PlanSolution& sol) const {
  double total = 0.0;
  for (int a = 0; a < inst.num_dcs; ++a)
    for (int b = 0; b < inst.num_dcs; ++b) {
      if (a == b) continue;
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d)
          total += sol.arc_flow(a, b, l, d) * aux_value(inst, a, b, l, sol.arc_used(a, b, l, d));
    }
  return total;
}

TransportLinearization linearize_transport_term(const PlanningInstance& inst) {
  // M must dominate every VTC entry so that an unused arc's bound is <= 0.
  double max_vtc = 0.0;
  for (double v : inst.transport_cost.flat()) max_vtc = std::max(max_vtc, v);
  return linearize_transport_term(inst, std::max(1.0, max_vtc));
}

TransportLinearization linearize_transport_term(const PlanningInstance& inst, double big_m) {
  if (big_m <= 0.0) throw ValidationError("linearization big-M must be positive");
  TransportLinearization lin;
  lin.big_m = big_m;
  lin.num_aux_vars =
      inst.num_dcs * (inst.num_dcs - 1) * inst.num_vehicles * inst.num_demand_days;
  return lin;
}

double bilinear_transport_cost(const PlanningInstance& inst, const PlanSolution& sol) {
  double total = 0.0;
  for (int a = 0; a < inst.num_dcs; ++a)
    for (int b = 0; b < inst.num_dcs; ++b) {
      if (a == b) continue;
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d)
          if (sol.arc_used(a, b, l, d))
            total += sol.arc_flow(a, b, l, d) * inst.transport_cost(a, b, l);
    }
  return total;
}

SoftenedDemand robustify_demand_constraint(const PlanningInstance& inst,
                                           const RobustConfig& robust) {
  robust.validate(inst);
  SoftenedDemand soft;
  soft.effective_demand =
      NdArray<double>({inst.num_demand_days, inst.num_products, inst.num_dcs});
  double slack_total = 0.0;
  for (int d = 0; d < inst.num_demand_days; ++d)
    for (int p = 0; p < inst.num_products; ++p)
      for (int a = 0; a < inst.num_dcs; ++a) {
        const double s = robust.slack(d, p, a);
        soft.effective_demand(d, p, a) = inst.demand(d, p, a) - s;
        if (a >= 1) slack_total += s;
      }
  soft.penalty = robust.gamma * slack_total;
  return soft;
}

}  // namespace yplan
