#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yplan/instance.hpp"
#include "yplan/ndarray.hpp"

namespace yplan {

// Full decision-variable record for one plan. Array nesting follows the
// subscript order of the variable symbols (Q_pji -> [p][j][i], ...).
struct PlanSolution {
  NdArray<double> production;        // Q_pji [p][j][i] (kg)
  NdArray<double> total_production;  // QB_pi [p][i] (kg)
  NdArray<double> inventory;         // II_pi [p][i] (kg, end of day)
  NdArray<double> unmet;             // UnmD_adp [a][d][p] (kg)
  NdArray<double> delivered;         // UD_apld [a][p][l][d] (kg)
  NdArray<double> arc_product_flow;  // UV_abpld [a][b][p][l][d] (kg)
  NdArray<double> arc_flow;          // UB_abld [a][b][l][d] (kg)
  NdArray<double> processing_time;   // PT_fji [f][j][i] (min)
  NdArray<double> completion_time;   // CT_fji [f][j][i] (min)
  NdArray<double> family_makespan;   // CmaxFamily_fi [f][i] (min)
  NdArray<double> line_makespan;     // CmaxLine_ji [j][i] (min)
  std::vector<double> overtime;      // OverTime_i (min)
  NdArray<std::uint8_t> line_used;        // V_ji [j][i]
  NdArray<std::uint8_t> recipe_used;      // G_ri [r][i]
  NdArray<std::uint8_t> sequence;         // X_feji [f][e][j][i]
  NdArray<std::uint8_t> family_assigned;  // Y_fji [f][j][i]
  NdArray<std::uint8_t> product_assigned; // YB_pji [p][j][i]
  NdArray<std::uint8_t> arc_used;         // ZV_abld [a][b][l][d]
  NdArray<double> visit_order;       // o_da [d][a]: per-day MTZ positions
  double objective = 0.0;            // Z

  static PlanSolution zeros(const PlanningInstance& inst);

  // Throws DimensionError naming the first mismatching field.
  void check_dimensions(const PlanningInstance& inst) const;
};

// The cost terms of the objective plus the uncertainty penalty.
struct ObjectiveBreakdown {
  double variable_production = 0.0;
  double inventory_holding = 0.0;
  double recipe_preparation = 0.0;
  double changeover = 0.0;
  double overtime = 0.0;
  double unmet_demand = 0.0;
  double line_utilization = 0.0;
  double transportation = 0.0;
  double robust_penalty = 0.0;
  double total = 0.0;

  double sum_of_terms() const {
    return variable_production + inventory_holding + recipe_preparation +
           changeover + overtime + unmet_demand + line_utilization +
           transportation + robust_penalty;
  }
};

// One violated (constraint, index) pair. For inequalities lhs <= rhs;
// equalities are reported with the violated side as lhs, so that
// violation == max(0, lhs - rhs) in every report.
struct ConstraintReport {
  std::string constraint_id;   // "C2" .. "C44" plus "C27b"/"C41b"
  std::vector<int> index_tuple;
  double lhs = 0.0;
  double rhs = 0.0;
  double violation = 0.0;
};

}  // namespace yplan
