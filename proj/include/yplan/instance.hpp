#pragma once

#include <vector>

#include "yplan/ndarray.hpp"

namespace yplan {

// One planning problem: a single plant (DC index 0) shipping to distribution
// centers 1..num_dcs-1 over a short horizon. Kilograms and minutes are the
// base units; days index both production and demand horizons.
//
// Subscript conventions used throughout (also the on-disk array nesting
// order): Demand_dpa -> [d][p][a], Cht_fej -> [f][e][j], VTC_abl -> [a][b][l],
// and so on, reading the trailing index letters of the field's symbol.
struct PlanningInstance {
  // Set cardinalities. num_dcs counts the depot.
  int num_dcs = 0;
  int num_families = 0;
  int num_lines = 0;
  int num_vehicles = 0;
  int num_products = 0;
  int num_demand_days = 0;
  int num_recipes = 0;
  int num_production_days = 0;

  // Days between production and earliest shipment (cooling + QC).
  int cooling_lag_days = 0;

  // Subsets.
  std::vector<int> family_of_product;              // p -> f
  std::vector<std::vector<int>> lines_for_family;  // J_f
  std::vector<std::vector<int>> lines_for_product; // J_p, subset of J_f
  std::vector<std::vector<int>> families_on_line;  // F_j, inverse of J_f
  std::vector<std::vector<int>> recipes_for_family;// R_f
  std::vector<std::vector<int>> recipes_on_line;   // R_j = union of R_f over F_j
  std::vector<std::vector<int>> families_of_recipe;// F_r, inverse of R_f

  // Parameters (Table-2 symbols in trailing comments).
  std::vector<double> recipe_prep_time;  // Pret_r (min)
  std::vector<double> regular_time;      // Rtime_i (min)
  std::vector<double> max_time;          // Maxtime_i (min)
  std::vector<double> shelf_life;        // ShelfLife_p (days)
  std::vector<double> freshness_rate;    // CrRate_p in [0,1]
  std::vector<double> truck_fixed_cost;  // FCT_l
  std::vector<double> variable_cost;     // VarCost_p (per kg)
  std::vector<double> overtime_cost;     // OvertCost_i (per min)
  std::vector<double> truck_max_load;    // MaxTC_l (kg)
  std::vector<double> truck_min_load;    // MinTC_l (kg)
  std::vector<double> plant_capacity;    // Pcapacity_i (kg)
  std::vector<double> pallet_factor;     // Pallet_p (pallets per kg)
  NdArray<double> daily_opening;         // dailyop_ji [j][i] (min)
  NdArray<double> daily_shutdown;        // dailysh_ji [j][i] (min)
  NdArray<double> shift_length;          // W_ji [j][i] (min)
  NdArray<double> changeover_time;       // Cht_fej [f][e][j] (min)
  NdArray<double> changeover_cost;       // Chc_feji [f][e][j][i]
  NdArray<double> setup_time;            // Setup_jp [j][p] (min)
  NdArray<double> recipe_release;        // Relt_ri [r][i] (min)
  NdArray<double> unit_prep_time;        // O_ji [j][i] (min)
  NdArray<double> recipe_batch_cost;     // Bpc_ri [r][i]
  NdArray<double> inventory_cost;        // IC_pi [p][i] (per kg per day)
  NdArray<double> transport_cost;        // VTC_abl [a][b][l] (per kg per arc)
  NdArray<double> line_cost;             // LineCost_ji [j][i]
  NdArray<double> line_fixed_cost;       // FCost_ji [j][i]
  std::vector<double> max_lot;           // MaxLots_p (kg)
  std::vector<double> min_lot;           // MinLots_p (kg)
  NdArray<double> demand;                // Demand_dpa [d][p][a] (kg), zero at a=0
  NdArray<double> production_rate;       // Prate_jp [j][p] (kg/min)
  NdArray<double> unmet_cost;            // UnmdCost_ap [a][p] (per kg)
  NdArray<double> recipe_max;            // MuMax_ri [r][i] (kg)
  NdArray<double> recipe_min;            // MuMin_ri [r][i] (kg)
  double cooling_time_min = 0.0;         // CST (min)
  double qc_time_min = 0.0;              // QCTime (min)
  double storage_capacity = 0.0;         // StCapacity (pallets)
  double big_m = 1e6;                    // M (paper-strict global constant)

  int num_customers() const { return num_dcs - 1; }

  // P_f derived from family_of_product.
  std::vector<std::vector<int>> products_of_family() const;
  // P_r: products of all families carrying recipe r.
  std::vector<std::vector<int>> products_of_recipe() const;

  double total_demand_on_day(int d) const;
  double demand_of_customer_on_day(int a, int d) const;

  // Shipment freshness gate: products shipped with the standard cooling lag
  // still meet the customer's minimum remaining shelf life.
  bool freshness_gate_open(int p) const {
    return static_cast<double>(cooling_lag_days) <
           (1.0 - freshness_rate[static_cast<std::size_t>(p)]) * shelf_life[static_cast<std::size_t>(p)];
  }

  // Throws ValidationError naming the offending field.
  void validate() const;
};

// Fuzzy softening of the demand-coverage constraint: a triangular violation
// allowance (modal value with right/left spreads), a satisfaction level
// alpha, and a penalty rate gamma per kg of allowed violation.
struct RobustConfig {
  NdArray<double> modal_violation;  // t^m [d][p][a] (kg)
  NdArray<double> spread_right;     // phi [d][p][a] (kg)
  NdArray<double> spread_left;      // phi' [d][p][a] (kg)
  double alpha = 1.0;
  double gamma = 0.0;

  // Allowed violation of the softened constraint at one (d,p,a) cell.
  double slack(int d, int p, int a) const {
    return (modal_violation(d, p, a) +
            (spread_right(d, p, a) - spread_left(d, p, a)) / 3.0) *
           (1.0 - alpha);
  }

  // Default spreads: modal = nominal demand, right spread 10% and left
  // spread 5% of it.
  static RobustConfig defaults_for(const PlanningInstance& inst, double alpha, double gamma);

  void validate(const PlanningInstance& inst) const;
};

}  // namespace yplan
