#pragma once

// Test-side construction utilities. build_simulated_solution is the
// independent simulation oracle (produce -> cool -> ship) used to cross-check
// the library's constraint checker and decoders; it shares no code with them.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "yplan/instance.hpp"
#include "yplan/solution.hpp"

namespace testutil {

struct ToyDims {
  int customers = 1;
  int products = 1;
  int lines = 1;
  int vehicles = 1;
  int days = 1;           // demand days == production days
  int families = 1;
  int recipes = 1;
  int cooling_lag = 1;
};

// Frictionless instance: zero overheads and costs except where a test sets
// them, every product on every line, demand left at zero.
inline yplan::PlanningInstance toy_instance(const ToyDims& dims = {}) {
  using yplan::NdArray;
  yplan::PlanningInstance inst;
  const int A = dims.customers + 1, F = dims.families, J = dims.lines;
  const int L = dims.vehicles, P = dims.products, D = dims.days;
  const int R = dims.recipes, I = dims.days;
  inst.num_dcs = A;
  inst.num_families = F;
  inst.num_lines = J;
  inst.num_vehicles = L;
  inst.num_products = P;
  inst.num_demand_days = D;
  inst.num_recipes = R;
  inst.num_production_days = I;
  inst.cooling_lag_days = dims.cooling_lag;

  inst.family_of_product.resize(P);
  for (int p = 0; p < P; ++p) inst.family_of_product[p] = p % F;
  std::vector<int> all_lines(J);
  for (int j = 0; j < J; ++j) all_lines[j] = j;
  inst.lines_for_family.assign(F, all_lines);
  inst.lines_for_product.assign(P, all_lines);
  std::vector<int> all_families(F);
  for (int f = 0; f < F; ++f) all_families[f] = f;
  inst.families_on_line.assign(J, all_families);
  inst.recipes_for_family.resize(F);
  inst.families_of_recipe.resize(R);
  for (int f = 0; f < F; ++f) {
    const int r = f % R;
    inst.recipes_for_family[f] = {r};
    inst.families_of_recipe[r].push_back(f);
  }
  // A recipe with no family keeps validate() happy only if every family has
  // one; orphan recipes stay unused.
  inst.recipes_on_line.resize(J);
  for (int j = 0; j < J; ++j) {
    std::vector<int> rj;
    for (int f = 0; f < F; ++f) rj.push_back(inst.recipes_for_family[f][0]);
    std::sort(rj.begin(), rj.end());
    rj.erase(std::unique(rj.begin(), rj.end()), rj.end());
    inst.recipes_on_line[j] = rj;
  }

  inst.recipe_prep_time.assign(R, 0.0);
  inst.regular_time.assign(I, 480.0);
  inst.max_time.assign(I, 720.0);
  inst.shelf_life.assign(P, 30.0);
  inst.freshness_rate.assign(P, 0.5);
  inst.truck_fixed_cost.assign(L, 0.0);
  inst.variable_cost.assign(P, 0.0);
  inst.overtime_cost.assign(I, 0.0);
  inst.truck_max_load.assign(L, 1e6);
  inst.truck_min_load.assign(L, 0.0);
  inst.plant_capacity.assign(I, 1e9);
  inst.pallet_factor.assign(P, 0.01);
  inst.daily_opening = NdArray<double>({J, I}, 0.0);
  inst.daily_shutdown = NdArray<double>({J, I}, 0.0);
  inst.shift_length = NdArray<double>({J, I}, 720.0);
  inst.changeover_time = NdArray<double>({F, F, J}, 0.0);
  inst.changeover_cost = NdArray<double>({F, F, J, I}, 0.0);
  inst.setup_time = NdArray<double>({J, P}, 0.0);
  inst.recipe_release = NdArray<double>({R, I}, 0.0);
  inst.unit_prep_time = NdArray<double>({J, I}, 0.0);
  inst.recipe_batch_cost = NdArray<double>({R, I}, 0.0);
  inst.inventory_cost = NdArray<double>({P, I}, 0.0);
  inst.transport_cost = NdArray<double>({A, A, L}, 1.0);
  for (int a = 0; a < A; ++a)
    for (int l = 0; l < L; ++l) inst.transport_cost(a, a, l) = 0.0;
  inst.line_cost = NdArray<double>({J, I}, 0.0);
  inst.line_fixed_cost = NdArray<double>({J, I}, 0.0);
  inst.max_lot.assign(P, 1e6);
  inst.min_lot.assign(P, 0.0);
  inst.demand = NdArray<double>({D, P, A}, 0.0);
  inst.production_rate = NdArray<double>({J, P}, 10.0);
  inst.unmet_cost = NdArray<double>({A, P}, 10.0);
  inst.recipe_max = NdArray<double>({R, I}, 1e9);
  inst.recipe_min = NdArray<double>({R, I}, 0.0);
  inst.cooling_time_min = 480.0;
  inst.qc_time_min = 240.0;
  inst.storage_capacity = 1e9;
  inst.big_m = 1e6;
  inst.validate();
  return inst;
}

// One day's plan for the simulation oracle.
struct SimDay {
  // quantities[j][p]: kg produced on line j (families scheduled in ascending
  // family order of the assigned products).
  std::vector<std::vector<double>> quantities;
  // routes[l]: ordered customer stops for vehicle l (empty = vehicle idle).
  std::vector<std::vector<int>> routes;
  // deliveries[a][p]: kg dropped at customer a (must lie on some route).
  std::map<int, std::vector<double>> deliveries;
};

// Builds a full solution record by plain simulation: schedules lines with
// earliest-start timing, tracks end-of-day inventory, and loads vehicles
// front-to-back so that flows conserve per product.
inline yplan::PlanSolution build_simulated_solution(const yplan::PlanningInstance& inst,
                                                    const std::vector<SimDay>& days) {
  using yplan::PlanSolution;
  PlanSolution sol = PlanSolution::zeros(inst);
  const int P = inst.num_products, J = inst.num_lines, F = inst.num_families;
  const int D = inst.num_demand_days, I = inst.num_production_days;
  const auto pf = inst.products_of_family();

  for (int i = 0; i < I && i < static_cast<int>(days.size()); ++i) {
    const SimDay& day = days[static_cast<std::size_t>(i)];
    // Production and schedule.
    for (int j = 0; j < J; ++j) {
      if (j >= static_cast<int>(day.quantities.size())) break;
      const auto& q = day.quantities[static_cast<std::size_t>(j)];
      double clock = 0.0;
      int prev_family = -1;
      for (int f = 0; f < F; ++f) {
        double pt = 0.0;
        bool any = false;
        for (int p : pf[static_cast<std::size_t>(f)]) {
          const double qty = p < static_cast<int>(q.size()) ? q[static_cast<std::size_t>(p)] : 0.0;
          if (qty <= 0.0) continue;
          any = true;
          sol.production(p, j, i) = qty;
          sol.product_assigned(p, j, i) = 1;
          pt += qty / inst.production_rate(j, p) + inst.setup_time(j, p);
        }
        if (!any) continue;
        sol.family_assigned(f, j, i) = 1;
        sol.processing_time(f, j, i) = pt;
        double overhead = inst.daily_opening(j, i);
        double recipe_part = 0.0;
        for (int r : inst.recipes_for_family[static_cast<std::size_t>(f)])
          recipe_part = std::max(recipe_part,
                                 inst.recipe_prep_time[static_cast<std::size_t>(r)] +
                                     std::max(inst.unit_prep_time(j, i), inst.recipe_release(r, i)));
        overhead += recipe_part;
        double start = overhead;
        if (prev_family >= 0) {
          sol.sequence(prev_family, f, j, i) = 1;
          start = std::max(start, sol.completion_time(prev_family, j, i) +
                                      inst.changeover_time(prev_family, f, j));
        }
        sol.completion_time(f, j, i) = start + pt;
        prev_family = f;
      }
      bool used = false;
      double cmax_line = 0.0;
      for (int f = 0; f < F; ++f)
        if (sol.family_assigned(f, j, i)) {
          used = true;
          cmax_line = std::max(cmax_line, sol.completion_time(f, j, i));
        }
      sol.line_used(j, i) = used ? 1 : 0;
      sol.line_makespan(j, i) = cmax_line;
    }
    for (int f = 0; f < F; ++f) {
      double s = 0.0;
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)])
        s += sol.completion_time(f, j, i);
      sol.family_makespan(f, i) = s;
    }
    double max_cmax = 0.0;
    for (int f = 0; f < F; ++f) max_cmax = std::max(max_cmax, sol.family_makespan(f, i));
    sol.overtime[static_cast<std::size_t>(i)] =
        std::max(0.0, max_cmax - inst.regular_time[static_cast<std::size_t>(i)]);
    for (int r = 0; r < inst.num_recipes; ++r) {
      bool g = false;
      for (int f : inst.families_of_recipe[static_cast<std::size_t>(r)])
        for (int j : inst.lines_for_family[static_cast<std::size_t>(f)])
          if (sol.family_assigned(f, j, i)) g = true;
      sol.recipe_used(r, i) = g ? 1 : 0;
    }
    for (int p = 0; p < P; ++p) {
      double qb = 0.0;
      for (int j = 0; j < J; ++j) qb += sol.production(p, j, i);
      sol.total_production(p, i) = qb;
    }

    // Deliveries and routing.
    if (i < D) {
      for (int l = 0; l < inst.num_vehicles; ++l) {
        if (l >= static_cast<int>(day.routes.size())) break;
        const auto& stops = day.routes[static_cast<std::size_t>(l)];
        if (stops.empty()) continue;
        // Remaining load after each stop, per product.
        std::vector<double> onboard(static_cast<std::size_t>(P), 0.0);
        for (int a : stops) {
          auto it = day.deliveries.find(a);
          if (it == day.deliveries.end()) continue;
          for (int p = 0; p < P; ++p)
            onboard[static_cast<std::size_t>(p)] += it->second[static_cast<std::size_t>(p)];
        }
        int prev = 0;
        int pos = 1;
        for (int a : stops) {
          sol.arc_used(prev, a, l, i) = 1;
          for (int p = 0; p < P; ++p) {
            sol.arc_product_flow(prev, a, p, l, i) = onboard[static_cast<std::size_t>(p)];
            sol.arc_flow(prev, a, l, i) += onboard[static_cast<std::size_t>(p)];
          }
          auto it = day.deliveries.find(a);
          if (it != day.deliveries.end())
            for (int p = 0; p < P; ++p) {
              sol.delivered(a, p, l, i) = it->second[static_cast<std::size_t>(p)];
              onboard[static_cast<std::size_t>(p)] -= it->second[static_cast<std::size_t>(p)];
            }
          sol.visit_order(i, a) = static_cast<double>(pos++);
          prev = a;
        }
        sol.arc_used(prev, 0, l, i) = 1;  // return with whatever is left
        for (int p = 0; p < P; ++p) {
          sol.arc_product_flow(prev, 0, p, l, i) = onboard[static_cast<std::size_t>(p)];
          sol.arc_flow(prev, 0, l, i) += onboard[static_cast<std::size_t>(p)];
        }
      }
    }

    // Inventory balance and unmet demand.
    for (int p = 0; p < P; ++p) {
      double shipped = 0.0;
      if (i < D)
        for (int l = 0; l < inst.num_vehicles; ++l)
          for (int a = 1; a < inst.num_dcs; ++a) shipped += sol.arc_product_flow(0, a, p, l, i);
      const double prev_ii = i > 0 ? sol.inventory(p, i - 1) : 0.0;
      sol.inventory(p, i) = prev_ii + sol.total_production(p, i) - shipped;
    }
  }
  for (int d = 0; d < D; ++d)
    for (int a = 1; a < inst.num_dcs; ++a)
      for (int p = 0; p < P; ++p) {
        double served = 0.0;
        for (int l = 0; l < inst.num_vehicles; ++l) served += sol.delivered(a, p, l, d);
        sol.unmet(a, d, p) = std::max(0.0, inst.demand(d, p, a) - served);
      }
  return sol;
}

}  // namespace testutil
