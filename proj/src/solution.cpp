#include "yplan/solution.hpp"

#include <sstream>

#include "yplan/errors.hpp"

namespace yplan {

PlanSolution PlanSolution::zeros(const PlanningInstance& inst) {
  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;
  PlanSolution s;
  s.production = NdArray<double>({P, J, I});
  s.total_production = NdArray<double>({P, I});
  s.inventory = NdArray<double>({P, I});
  s.unmet = NdArray<double>({A, D, P});
  s.delivered = NdArray<double>({A, P, L, D});
  s.arc_product_flow = NdArray<double>({A, A, P, L, D});
  s.arc_flow = NdArray<double>({A, A, L, D});
  s.processing_time = NdArray<double>({F, J, I});
  s.completion_time = NdArray<double>({F, J, I});
  s.family_makespan = NdArray<double>({F, I});
  s.line_makespan = NdArray<double>({J, I});
  s.overtime.assign(static_cast<std::size_t>(I), 0.0);
  s.line_used = NdArray<std::uint8_t>({J, I});
  s.recipe_used = NdArray<std::uint8_t>({R, I});
  s.sequence = NdArray<std::uint8_t>({F, F, J, I});
  s.family_assigned = NdArray<std::uint8_t>({F, J, I});
  s.product_assigned = NdArray<std::uint8_t>({P, J, I});
  s.arc_used = NdArray<std::uint8_t>({A, A, L, D});
  s.visit_order = NdArray<double>({D, A});
  s.objective = 0.0;
  return s;
}

namespace {

template <typename T>
void want_dims(const NdArray<T>& arr, const std::vector<int>& dims, const char* field) {
  if (arr.dims() != dims) {
    std::ostringstream os;
    os << "solution field " << field << " does not match the instance dimensions";
    throw DimensionError(os.str());
  }
}

}  // namespace

void PlanSolution::check_dimensions(const PlanningInstance& inst) const {
  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;
  want_dims(production, {P, J, I}, "Q_pji");
  want_dims(total_production, {P, I}, "QB_pi");
  want_dims(inventory, {P, I}, "II_pi");
  want_dims(unmet, {A, D, P}, "UnmD_adp");
  want_dims(delivered, {A, P, L, D}, "UD_apld");
  want_dims(arc_product_flow, {A, A, P, L, D}, "UV_abpld");
  want_dims(arc_flow, {A, A, L, D}, "UB_abld");
  want_dims(processing_time, {F, J, I}, "PT_fji");
  want_dims(completion_time, {F, J, I}, "CT_fji");
  want_dims(family_makespan, {F, I}, "CmaxFamily_fi");
  want_dims(line_makespan, {J, I}, "CmaxLine_ji");
  if (static_cast<int>(overtime.size()) != I)
    throw DimensionError("solution field OverTime_i does not match the instance dimensions");
  want_dims(line_used, {J, I}, "V_ji");
  want_dims(recipe_used, {R, I}, "G_ri");
  want_dims(sequence, {F, F, J, I}, "X_feji");
  want_dims(family_assigned, {F, J, I}, "Y_fji");
  want_dims(product_assigned, {P, J, I}, "YB_pji");
  want_dims(arc_used, {A, A, L, D}, "ZV_abld");
  want_dims(visit_order, {D, A}, "o_da");
}

}  // namespace yplan
