#include "yplan/case_study.hpp"

#include "yplan/rng.hpp"

namespace yplan {

namespace {

// Recorded demand (kg-equivalent units) per period, product, and Canbo
// branch 1..10. Three entries are repaired so that every branch's per-product
// column sums to the audited per-branch totals of the source data
// (period 2 / Canbo 4 eggplant 80 -> 50, period 3 / Canbo 1 cream 85 -> 80,
// period 5 / Canbo 9 strawberry 65 -> 75).
constexpr double kDemand[5][6][10] = {
    // period 1: cream, lowfat, traditional, eggplant, strawberry, cucumber
    {{65, 60, 65, 65, 60, 60, 55, 95, 90, 85},
     {60, 65, 60, 70, 65, 55, 60, 85, 90, 85},
     {60, 65, 75, 65, 55, 60, 50, 92, 85, 85},
     {50, 50, 50, 50, 50, 42, 55, 87, 85, 80},
     {65, 52, 50, 55, 50, 50, 52, 82, 85, 85},
     {50, 50, 65, 55, 52, 50, 55, 80, 80, 80}},
    // period 2
    {{65, 75, 65, 75, 60, 60, 55, 65, 60, 55},
     {85, 65, 70, 65, 65, 55, 60, 55, 70, 55},
     {75, 60, 75, 60, 55, 60, 50, 60, 55, 55},
     {60, 65, 60, 50, 55, 52, 55, 55, 60, 50},
     {65, 72, 65, 55, 50, 50, 52, 52, 55, 55},
     {55, 65, 50, 50, 52, 50, 55, 50, 50, 50}},
    // period 3
    {{80, 65, 75, 60, 60, 60, 55, 60, 65, 55},
     {65, 85, 80, 75, 65, 55, 60, 55, 60, 55},
     {82, 80, 75, 82, 55, 55, 50, 60, 55, 55},
     {75, 50, 50, 60, 55, 52, 55, 55, 55, 50},
     {60, 55, 50, 55, 50, 50, 52, 52, 55, 55},
     {50, 60, 50, 50, 52, 50, 55, 50, 50, 55}},
    // period 4
    {{80, 70, 65, 55, 50, 60, 55, 55, 70, 75},
     {70, 75, 60, 55, 50, 50, 40, 55, 90, 85},
     {85, 85, 60, 55, 55, 55, 55, 60, 85, 95},
     {65, 60, 65, 45, 45, 42, 40, 50, 55, 65},
     {55, 60, 72, 50, 45, 45, 50, 52, 80, 70},
     {62, 70, 55, 42, 40, 50, 52, 45, 60, 70}},
    // period 5
    {{60, 85, 85, 60, 60, 75, 65, 60, 60, 65},
     {75, 75, 60, 70, 75, 60, 65, 60, 60, 55},
     {60, 75, 60, 60, 85, 60, 60, 60, 75, 75},
     {85, 60, 85, 60, 70, 65, 55, 65, 50, 60},
     {85, 60, 60, 85, 85, 85, 70, 55, 65, 75},
     {80, 62, 85, 85, 62, 85, 55, 62, 55, 60}},
};

constexpr const char* kProductNames[6] = {
    "Cream yogurt",       "Low-fat yogurt",          "Traditional strained yogurt",
    "Eggplant yogurt",    "Strawberry fruit yogurt", "Cucumber yogurt",
};

}  // namespace

std::string case_product_name(int p) { return kProductNames[p]; }

PlanningInstance case_study() {
  PlanningInstance inst;
  inst.num_dcs = 11;  // depot + 10 Canbo branches
  inst.num_families = 2;
  inst.num_lines = 2;
  inst.num_vehicles = 3;
  inst.num_products = 6;
  inst.num_demand_days = 5;
  inst.num_recipes = 2;
  inst.num_production_days = 5;
  inst.cooling_lag_days = 1;  // one day of cooling storage + quality control

  const int A = 11, F = 2, J = 2, L = 3, P = 6, D = 5, R = 2, I = 5;

  // Family 0 = set yogurt (cream, low-fat, traditional strained),
  // family 1 = stirred yogurt (eggplant, strawberry, cucumber).
  inst.family_of_product = {0, 0, 0, 1, 1, 1};
  inst.lines_for_family = {{0, 1}, {0, 1}};  // identical lines, all products
  inst.lines_for_product.assign(P, {0, 1});
  inst.families_on_line = {{0, 1}, {0, 1}};
  inst.recipes_for_family = {{0}, {1}};  // one fermentation recipe per family
  inst.recipes_on_line = {{0, 1}, {0, 1}};
  inst.families_of_recipe = {{0}, {1}};

  // Published operating figures: 8 h regular shifts with up to 4 h overtime,
  // vehicle load window [500, 1500], one-day cooling.
  inst.regular_time.assign(I, 480.0);
  inst.max_time.assign(I, 720.0);
  inst.truck_min_load.assign(L, 500.0);
  inst.truck_max_load.assign(L, 1500.0);
  inst.cooling_time_min = 480.0;
  inst.qc_time_min = 240.0;

  // Unpublished parameters are frozen draws from the standard sampling
  // ranges (seed 91); structural capacities are pinned at workable range
  // endpoints so the fixture stays solvable.
  Rng rng(Rng::derive(91, 0xca5e));
  auto vec = [&](int n, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
  };
  auto arr = [&](std::vector<int> dims, double lo, double hi) {
    NdArray<double> a(std::move(dims));
    for (double& x : a.flat()) x = rng.uniform(lo, hi);
    return a;
  };

  inst.recipe_prep_time = vec(R, 3, 5);
  inst.shelf_life = vec(P, 15, 45);
  inst.freshness_rate.assign(P, 0.5);
  inst.truck_fixed_cost = vec(L, 100, 150);
  inst.variable_cost = vec(P, 0.09, 0.15);
  inst.overtime_cost = vec(I, 1, 3);
  inst.plant_capacity.assign(I, 5000.0);
  inst.pallet_factor = vec(P, 0.05, 0.08);
  inst.daily_opening = arr({J, I}, 5, 10);
  inst.daily_shutdown = arr({J, I}, 10, 20);
  inst.shift_length = NdArray<double>({J, I}, 720.0);
  inst.changeover_time = arr({F, F, J}, 5, 10);
  inst.changeover_cost = arr({F, F, J, I}, 5, 10);
  inst.setup_time = arr({J, P}, 30, 50);
  inst.recipe_release = arr({R, I}, 5, 15);
  inst.unit_prep_time = arr({J, I}, 5, 10);
  inst.recipe_batch_cost = arr({R, I}, 5, 10);
  inst.inventory_cost = arr({P, I}, 0.05, 2);
  inst.transport_cost = arr({A, A, L}, 1, 10);
  for (int a = 0; a < A; ++a)
    for (int l = 0; l < L; ++l) inst.transport_cost(a, a, l) = 0.0;
  inst.line_cost = arr({J, I}, 10, 15);
  inst.line_fixed_cost = arr({J, I}, 15, 30);
  inst.max_lot.assign(P, 5000.0);
  inst.min_lot.assign(P, 500.0);
  inst.production_rate = arr({J, P}, 5, 10);
  inst.unmet_cost = arr({A, P}, 5, 15);
  inst.recipe_max = NdArray<double>({R, I}, 4000.0);
  inst.recipe_min = NdArray<double>({R, I}, 300.0);
  inst.storage_capacity = 5000.0;
  inst.big_m = 1e6;

  inst.demand = NdArray<double>({D, P, A});
  for (int d = 0; d < D; ++d)
    for (int p = 0; p < P; ++p)
      for (int a = 1; a < A; ++a) inst.demand(d, p, a) = kDemand[d][p][a - 1];

  inst.validate();
  return inst;
}

std::vector<ReferenceRoute> case_study_reference_routes() {
  return {
      {0, 0, {1, 2, 3, 4}, 1417},
      {0, 1, {5, 6, 7, 8}, 1497},
      {0, 2, {9, 10}, 1015},
      {1, 0, {1, 2, 3}, 1172},  // demand sum for these stops is 1192
      {1, 1, {4, 5, 6, 7}, 1346},
      {1, 2, {8, 9, 10}, 1007},
      {2, 0, {1, 2, 3}, 1187},
      {2, 1, {4, 5, 6, 7}, 1368},
      {2, 2, {8, 9, 10}, 997},
      {3, 0, {1, 2, 3}, 1214},
      {3, 1, {4, 5, 6, 7, 8}, 1498},
      {3, 2, {9, 10}, 900},
      {4, 0, {1, 2, 3}, 1297},
      {4, 1, {4, 5, 6}, 1287},
      {4, 2, {7, 8, 9, 10}, 1484},
  };
}

}  // namespace yplan
