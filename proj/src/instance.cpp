#include "yplan/instance.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "yplan/errors.hpp"

namespace yplan {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::string at(const char* field, int i) {
  std::ostringstream os;
  os << field << "[" << i << "]";
  return os.str();
}

void check_nonneg(const std::vector<double>& v, const char* field) {
  for (std::size_t i = 0; i < v.size(); ++i)
    require(v[i] >= 0.0, at(field, static_cast<int>(i)) + " must be >= 0");
}

void check_nonneg(const NdArray<double>& v, const char* field) {
  for (double x : v.flat())
    require(x >= 0.0, std::string(field) + " entries must be >= 0");
}

void check_size(std::size_t got, std::size_t want, const char* field) {
  if (got != want) {
    std::ostringstream os;
    os << field << " has size " << got << ", expected " << want;
    throw ValidationError(os.str());
  }
}

void check_dims(const NdArray<double>& v, const std::vector<int>& want, const char* field) {
  if (v.dims() != want) {
    std::ostringstream os;
    os << field << " has wrong dimensions";
    throw ValidationError(os.str());
  }
}

}  // namespace

std::vector<std::vector<int>> PlanningInstance::products_of_family() const {
  std::vector<std::vector<int>> pf(static_cast<std::size_t>(num_families));
  for (int p = 0; p < num_products; ++p)
    pf[static_cast<std::size_t>(family_of_product[static_cast<std::size_t>(p)])].push_back(p);
  return pf;
}

std::vector<std::vector<int>> PlanningInstance::products_of_recipe() const {
  const auto pf = products_of_family();
  std::vector<std::vector<int>> pr(static_cast<std::size_t>(num_recipes));
  for (int r = 0; r < num_recipes; ++r) {
    for (int f : families_of_recipe[static_cast<std::size_t>(r)])
      for (int p : pf[static_cast<std::size_t>(f)])
        pr[static_cast<std::size_t>(r)].push_back(p);
    std::sort(pr[static_cast<std::size_t>(r)].begin(), pr[static_cast<std::size_t>(r)].end());
  }
  return pr;
}

double PlanningInstance::total_demand_on_day(int d) const {
  double s = 0.0;
  for (int p = 0; p < num_products; ++p)
    for (int a = 1; a < num_dcs; ++a) s += demand(d, p, a);
  return s;
}

double PlanningInstance::demand_of_customer_on_day(int a, int d) const {
  double s = 0.0;
  for (int p = 0; p < num_products; ++p) s += demand(d, p, a);
  return s;
}

void PlanningInstance::validate() const {
  require(num_dcs >= 1, "num_dcs must be >= 1");
  require(num_families >= 1, "num_families must be >= 1");
  require(num_lines >= 1, "num_lines must be >= 1");
  require(num_vehicles >= 0, "num_vehicles must be >= 0");
  require(num_products >= 1, "num_products must be >= 1");
  require(num_demand_days >= 1, "num_demand_days must be >= 1");
  require(num_recipes >= 1, "num_recipes must be >= 1");
  require(num_production_days >= 1, "num_production_days must be >= 1");
  require(cooling_lag_days >= 0, "cooling_lag_days must be >= 0");

  const int A = num_dcs, F = num_families, J = num_lines, L = num_vehicles;
  const int P = num_products, D = num_demand_days, R = num_recipes, I = num_production_days;
  const auto su = [](int n) { return static_cast<std::size_t>(n); };

  check_size(family_of_product.size(), su(P), "family_of_product");
  check_size(lines_for_family.size(), su(F), "lines_for_family");
  check_size(lines_for_product.size(), su(P), "lines_for_product");
  check_size(families_on_line.size(), su(J), "families_on_line");
  check_size(recipes_for_family.size(), su(F), "recipes_for_family");
  check_size(recipes_on_line.size(), su(J), "recipes_on_line");
  check_size(families_of_recipe.size(), su(R), "families_of_recipe");

  for (int p = 0; p < P; ++p) {
    const int f = family_of_product[su(p)];
    require(f >= 0 && f < F, at("family_of_product", p) + " out of range");
  }
  for (int f = 0; f < F; ++f) {
    for (int j : lines_for_family[su(f)])
      require(j >= 0 && j < J, at("lines_for_family", f) + " has line out of range");
    require(!recipes_for_family[su(f)].empty(), at("recipes_for_family", f) + " must be nonempty");
    for (int r : recipes_for_family[su(f)])
      require(r >= 0 && r < R, at("recipes_for_family", f) + " has recipe out of range");
  }

  // p in P_f implies J_p subset of J_f.
  for (int p = 0; p < P; ++p) {
    const auto& jf = lines_for_family[su(family_of_product[su(p)])];
    for (int j : lines_for_product[su(p)]) {
      require(j >= 0 && j < J, at("lines_for_product", p) + " has line out of range");
      require(std::find(jf.begin(), jf.end(), j) != jf.end(),
              at("lines_for_product", p) + " is not a subset of its family's lines");
    }
  }

  // families_on_line must invert lines_for_family.
  for (int j = 0; j < J; ++j) {
    for (int f : families_on_line[su(j)]) {
      require(f >= 0 && f < F, at("families_on_line", j) + " has family out of range");
      const auto& jf = lines_for_family[su(f)];
      require(std::find(jf.begin(), jf.end(), j) != jf.end(),
              at("families_on_line", j) + " disagrees with lines_for_family");
    }
  }
  for (int f = 0; f < F; ++f)
    for (int j : lines_for_family[su(f)]) {
      const auto& fj = families_on_line[su(j)];
      require(std::find(fj.begin(), fj.end(), f) != fj.end(),
              at("lines_for_family", f) + " disagrees with families_on_line");
    }

  // families_of_recipe must invert recipes_for_family.
  for (int r = 0; r < R; ++r)
    for (int f : families_of_recipe[su(r)]) {
      require(f >= 0 && f < F, at("families_of_recipe", r) + " has family out of range");
      const auto& rf = recipes_for_family[su(f)];
      require(std::find(rf.begin(), rf.end(), r) != rf.end(),
              at("families_of_recipe", r) + " disagrees with recipes_for_family");
    }
  for (int f = 0; f < F; ++f)
    for (int r : recipes_for_family[su(f)]) {
      const auto& fr = families_of_recipe[su(r)];
      require(std::find(fr.begin(), fr.end(), f) != fr.end(),
              at("recipes_for_family", f) + " disagrees with families_of_recipe");
    }

  // recipes_on_line = union of recipe sets of the line's families.
  for (int j = 0; j < J; ++j) {
    std::vector<int> want;
    for (int f : families_on_line[su(j)])
      for (int r : recipes_for_family[su(f)]) want.push_back(r);
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::vector<int> got = recipes_on_line[su(j)];
    std::sort(got.begin(), got.end());
    require(got == want, at("recipes_on_line", j) + " must be the union of its families' recipes");
  }

  check_size(recipe_prep_time.size(), su(R), "Pret_r");
  check_size(regular_time.size(), su(I), "Rtime_i");
  check_size(max_time.size(), su(I), "Maxtime_i");
  check_size(shelf_life.size(), su(P), "ShelfLife_p");
  check_size(freshness_rate.size(), su(P), "CrRate_p");
  check_size(truck_fixed_cost.size(), su(L), "FCT_l");
  check_size(variable_cost.size(), su(P), "VarCost_p");
  check_size(overtime_cost.size(), su(I), "OvertCost_i");
  check_size(truck_max_load.size(), su(L), "MaxTC_l");
  check_size(truck_min_load.size(), su(L), "MinTC_l");
  check_size(plant_capacity.size(), su(I), "Pcapacity_i");
  check_size(pallet_factor.size(), su(P), "Pallet_p");
  check_size(max_lot.size(), su(P), "MaxLots_p");
  check_size(min_lot.size(), su(P), "MinLots_p");

  check_dims(daily_opening, {J, I}, "dailyop_ji");
  check_dims(daily_shutdown, {J, I}, "dailysh_ji");
  check_dims(shift_length, {J, I}, "W_ji");
  check_dims(changeover_time, {F, F, J}, "Cht_fej");
  check_dims(changeover_cost, {F, F, J, I}, "Chc_feji");
  check_dims(setup_time, {J, P}, "Setup_jp");
  check_dims(recipe_release, {R, I}, "Relt_ri");
  check_dims(unit_prep_time, {J, I}, "O_ji");
  check_dims(recipe_batch_cost, {R, I}, "Bpc_ri");
  check_dims(inventory_cost, {P, I}, "IC_pi");
  check_dims(transport_cost, {A, A, L}, "VTC_abl");
  check_dims(line_cost, {J, I}, "LineCost_ji");
  check_dims(line_fixed_cost, {J, I}, "FCost_ji");
  check_dims(demand, {D, P, A}, "Demand_dpa");
  check_dims(production_rate, {J, P}, "Prate_jp");
  check_dims(unmet_cost, {A, P}, "UnmdCost_ap");
  check_dims(recipe_max, {R, I}, "MuMax_ri");
  check_dims(recipe_min, {R, I}, "MuMin_ri");

  for (int p = 0; p < P; ++p) {
    const double c = freshness_rate[su(p)];
    if (c < 0.0 || c > 1.0) {
      std::ostringstream os;
      os << "CrRate_p[" << p << "] = " << c << " violates bounds [0, 1]";
      throw ValidationError(os.str());
    }
    require(min_lot[su(p)] <= max_lot[su(p)], at("MinLots_p", p) + " exceeds MaxLots_p");
  }
  for (int l = 0; l < L; ++l)
    require(truck_min_load[su(l)] <= truck_max_load[su(l)], at("MinTC_l", l) + " exceeds MaxTC_l");
  for (int i = 0; i < I; ++i)
    require(regular_time[su(i)] <= max_time[su(i)], at("Rtime_i", i) + " exceeds Maxtime_i");
  for (int r = 0; r < R; ++r)
    for (int i = 0; i < I; ++i)
      require(recipe_min(r, i) <= recipe_max(r, i), "MuMin_ri exceeds MuMax_ri");

  check_nonneg(recipe_prep_time, "Pret_r");
  check_nonneg(regular_time, "Rtime_i");
  check_nonneg(max_time, "Maxtime_i");
  check_nonneg(shelf_life, "ShelfLife_p");
  check_nonneg(truck_fixed_cost, "FCT_l");
  check_nonneg(variable_cost, "VarCost_p");
  check_nonneg(overtime_cost, "OvertCost_i");
  check_nonneg(truck_min_load, "MinTC_l");
  check_nonneg(plant_capacity, "Pcapacity_i");
  check_nonneg(pallet_factor, "Pallet_p");
  check_nonneg(min_lot, "MinLots_p");
  check_nonneg(daily_opening, "dailyop_ji");
  check_nonneg(daily_shutdown, "dailysh_ji");
  check_nonneg(shift_length, "W_ji");
  check_nonneg(changeover_time, "Cht_fej");
  check_nonneg(changeover_cost, "Chc_feji");
  check_nonneg(setup_time, "Setup_jp");
  check_nonneg(recipe_release, "Relt_ri");
  check_nonneg(unit_prep_time, "O_ji");
  check_nonneg(recipe_batch_cost, "Bpc_ri");
  check_nonneg(inventory_cost, "IC_pi");
  check_nonneg(transport_cost, "VTC_abl");
  check_nonneg(line_cost, "LineCost_ji");
  check_nonneg(line_fixed_cost, "FCost_ji");
  check_nonneg(demand, "Demand_dpa");
  check_nonneg(production_rate, "Prate_jp");
  check_nonneg(unmet_cost, "UnmdCost_ap");
  check_nonneg(recipe_min, "MuMin_ri");
  require(cooling_time_min >= 0.0, "CST must be >= 0");
  require(qc_time_min >= 0.0, "QCTime must be >= 0");
  require(storage_capacity >= 0.0, "StCapacity must be >= 0");
  require(big_m > 0.0, "M must be > 0");

  // The depot carries no demand.
  for (int d = 0; d < D; ++d)
    for (int p = 0; p < P; ++p)
      require(demand(d, p, 0) == 0.0, "Demand_dpa must be zero at the depot (a = 0)");
}

RobustConfig RobustConfig::defaults_for(const PlanningInstance& inst, double alpha, double gamma) {
  RobustConfig rc;
  const std::vector<int> dims = {inst.num_demand_days, inst.num_products, inst.num_dcs};
  rc.modal_violation = NdArray<double>(dims);
  rc.spread_right = NdArray<double>(dims);
  rc.spread_left = NdArray<double>(dims);
  for (int d = 0; d < inst.num_demand_days; ++d)
    for (int p = 0; p < inst.num_products; ++p)
      for (int a = 0; a < inst.num_dcs; ++a) {
        const double dem = inst.demand(d, p, a);
        rc.modal_violation(d, p, a) = dem;
        rc.spread_right(d, p, a) = 0.10 * dem;
        rc.spread_left(d, p, a) = 0.05 * dem;
      }
  rc.alpha = alpha;
  rc.gamma = gamma;
  return rc;
}

void RobustConfig::validate(const PlanningInstance& inst) const {
  if (alpha < 0.0 || alpha > 1.0) throw ValidationError("alpha must lie in [0, 1]");
  if (gamma < 0.0) throw ValidationError("gamma must be >= 0");
  const std::vector<int> dims = {inst.num_demand_days, inst.num_products, inst.num_dcs};
  if (modal_violation.dims() != dims) throw ValidationError("t_m has wrong dimensions");
  if (spread_right.dims() != dims) throw ValidationError("phi has wrong dimensions");
  if (spread_left.dims() != dims) throw ValidationError("phi_prime has wrong dimensions");
  for (double x : modal_violation.flat())
    if (x < 0.0) throw ValidationError("t_m entries must be >= 0");
  for (double x : spread_right.flat())
    if (x < 0.0) throw ValidationError("phi entries must be >= 0");
  for (double x : spread_left.flat())
    if (x < 0.0) throw ValidationError("phi_prime entries must be >= 0");
}

}  // namespace yplan
