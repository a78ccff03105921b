#include "yplan/generator.hpp"

#include <algorithm>
#include <cmath>

#include "yplan/errors.hpp"
#include "yplan/rng.hpp"

namespace yplan {

namespace {

struct Range {
  double lo = 0.0, hi = 0.0;
};

struct Scheme {
  const GenSpec& spec;

  Range range(const std::string& key, double lo, double hi) const {
    auto it = spec.overrides.find(key);
    if (it != spec.overrides.end()) {
      if (it->second.first > it->second.second)
        throw ValidationError("override for " + key + " has min > max");
      return {it->second.first, it->second.second};
    }
    return {lo, hi};
  }

  int set_size(Rng& rng, const std::string& key, int lo_s, int lo_m, int lo_l, int hi_s,
               int hi_m, int hi_l) const {
    int lo = lo_s, hi = hi_s;
    if (spec.size_class == SizeClass::kMedium) lo = lo_m, hi = hi_m;
    if (spec.size_class == SizeClass::kLarge) lo = lo_l, hi = hi_l;
    const Range r = range(key, lo, hi);
    return static_cast<int>(rng.uniform_int(static_cast<std::int64_t>(r.lo),
                                            static_cast<std::int64_t>(r.hi)));
  }

  double draw(Rng& rng, const std::string& key, double lo, double hi) const {
    const Range r = range(key, lo, hi);
    return rng.uniform(r.lo, r.hi);
  }
};

void fill(Rng& rng, const Scheme& s, std::vector<double>& v, int n, const std::string& key,
          double lo, double hi) {
  v.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = s.draw(rng, key, lo, hi);
}

void fill(Rng& rng, const Scheme& s, NdArray<double>& arr, std::vector<int> dims,
          const std::string& key, double lo, double hi) {
  arr = NdArray<double>(std::move(dims));
  for (double& x : arr.flat()) x = s.draw(rng, key, lo, hi);
}

// Draws a min/max pair with min <= max, resampling on violation.
void fill_ordered_pair(Rng& rng, const Scheme& s, std::vector<double>& lo_v,
                       std::vector<double>& hi_v, int n, const std::string& lo_key,
                       double lo_lo, double lo_hi, const std::string& hi_key, double hi_lo,
                       double hi_hi) {
  lo_v.resize(static_cast<std::size_t>(n));
  hi_v.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int attempt = 0;; ++attempt) {
      const double lo = s.draw(rng, lo_key, lo_lo, lo_hi);
      const double hi = s.draw(rng, hi_key, hi_lo, hi_hi);
      if (lo <= hi) {
        lo_v[static_cast<std::size_t>(k)] = lo;
        hi_v[static_cast<std::size_t>(k)] = hi;
        break;
      }
      if (attempt >= 1000)
        throw ValidationError("cannot satisfy " + lo_key + " <= " + hi_key +
                              " with the given ranges");
    }
  }
}

}  // namespace

SizeClass size_class_from_string(const std::string& s) {
  if (s == "small") return SizeClass::kSmall;
  if (s == "medium") return SizeClass::kMedium;
  if (s == "large") return SizeClass::kLarge;
  throw ValidationError("unknown size class: " + s);
}

std::string to_string(SizeClass s) {
  switch (s) {
    case SizeClass::kSmall: return "small";
    case SizeClass::kMedium: return "medium";
    case SizeClass::kLarge: return "large";
  }
  return "small";
}

PlanningInstance generate(const GenSpec& spec) {
  Rng rng(Rng::derive(spec.seed, 0x67656e)); // "gen" stream
  const Scheme s{spec};
  PlanningInstance inst;

  // Set cardinalities, in a fixed draw order.
  inst.num_dcs = s.set_size(rng, "a", 3, 6, 11, 5, 10, 15);
  inst.num_families = s.set_size(rng, "f", 1, 3, 5, 2, 4, 6);
  inst.num_lines = s.set_size(rng, "j", 2, 4, 6, 3, 5, 8);
  inst.num_vehicles = s.set_size(rng, "l", 2, 4, 6, 3, 5, 7);
  inst.num_products = s.set_size(rng, "p", 2, 5, 8, 4, 8, 12);
  inst.num_demand_days = s.set_size(rng, "d", 1, 4, 8, 3, 7, 12);
  inst.num_recipes = s.set_size(rng, "r", 1, 3, 5, 2, 4, 6);
  inst.num_production_days = s.set_size(rng, "i", 1, 4, 8, 3, 7, 12);

  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;
  const auto su = [](int n) { return static_cast<std::size_t>(n); };

  if (P < F) throw ValidationError("cannot assign every family a product: p < f");

  // Subsets: uniform assignment with nonempty repair.
  inst.family_of_product.resize(su(P));
  for (int p = 0; p < P; ++p)
    inst.family_of_product[su(p)] = static_cast<int>(rng.uniform_int(0, F - 1));
  {
    std::vector<int> count(su(F), 0);
    for (int p = 0; p < P; ++p) count[su(inst.family_of_product[su(p)])]++;
    for (int f = 0; f < F; ++f) {
      if (count[su(f)] > 0) continue;
      for (int p = 0; p < P; ++p) {
        const int g = inst.family_of_product[su(p)];
        if (count[su(g)] > 1) {
          inst.family_of_product[su(p)] = f;
          count[su(g)]--;
          count[su(f)]++;
          break;
        }
      }
    }
  }

  auto random_subset = [&](int n) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
      if (rng.bernoulli(0.5)) out.push_back(k);
    if (out.empty()) out.push_back(static_cast<int>(rng.uniform_int(0, n - 1)));
    return out;
  };

  inst.lines_for_family.resize(su(F));
  inst.recipes_for_family.resize(su(F));
  for (int f = 0; f < F; ++f) {
    inst.lines_for_family[su(f)] = random_subset(J);
    inst.recipes_for_family[su(f)] = random_subset(R);
  }
  inst.lines_for_product.resize(su(P));
  for (int p = 0; p < P; ++p) {
    const auto& jf = inst.lines_for_family[su(inst.family_of_product[su(p)])];
    std::vector<int> jp;
    for (int j : jf)
      if (rng.bernoulli(0.5)) jp.push_back(j);
    if (jp.empty())
      jp.push_back(jf[su(static_cast<int>(rng.uniform_int(0, static_cast<int>(jf.size()) - 1)))]);
    inst.lines_for_product[su(p)] = jp;
  }

  // Derived inverses.
  inst.families_on_line.assign(su(J), {});
  for (int f = 0; f < F; ++f)
    for (int j : inst.lines_for_family[su(f)]) inst.families_on_line[su(j)].push_back(f);
  inst.families_of_recipe.assign(su(R), {});
  for (int f = 0; f < F; ++f)
    for (int r : inst.recipes_for_family[su(f)]) inst.families_of_recipe[su(r)].push_back(f);
  inst.recipes_on_line.assign(su(J), {});
  for (int j = 0; j < J; ++j) {
    std::vector<int> rj;
    for (int f : inst.families_on_line[su(j)])
      for (int r : inst.recipes_for_family[su(f)]) rj.push_back(r);
    std::sort(rj.begin(), rj.end());
    rj.erase(std::unique(rj.begin(), rj.end()), rj.end());
    inst.recipes_on_line[su(j)] = rj;
  }

  // Parameters, in a fixed draw order.
  fill(rng, s, inst.recipe_prep_time, R, "Pret_r", 3, 5);
  fill_ordered_pair(rng, s, inst.regular_time, inst.max_time, I, "Rtime_i", 420, 480,
                    "Maxtime_i", 540, 720);
  fill(rng, s, inst.shelf_life, P, "ShelfLife_p", 15, 45);
  fill(rng, s, inst.freshness_rate, P, "CrRate_p", 0, 1);
  fill(rng, s, inst.truck_fixed_cost, L, "FCT_l", 100, 150);
  fill(rng, s, inst.variable_cost, P, "VarCost_p", 0.09, 0.15);
  fill(rng, s, inst.overtime_cost, I, "OvertCost_i", 1, 3);
  fill_ordered_pair(rng, s, inst.truck_min_load, inst.truck_max_load, L, "MinTC_l", 300, 600,
                    "MaxTC_l", 1000, 2000);
  fill(rng, s, inst.plant_capacity, I, "Pcapacity_i", 500, 5000);
  fill(rng, s, inst.pallet_factor, P, "Pallet_p", 0.05, 0.08);
  fill(rng, s, inst.daily_opening, {J, I}, "dailyop_ji", 5, 10);
  fill(rng, s, inst.daily_shutdown, {J, I}, "dailysh_ji", 10, 20);
  fill(rng, s, inst.shift_length, {J, I}, "W_ji", 480, 720);
  fill(rng, s, inst.changeover_time, {F, F, J}, "Cht_fej", 5, 10);
  fill(rng, s, inst.changeover_cost, {F, F, J, I}, "Chc_feji", 5, 10);
  fill(rng, s, inst.setup_time, {J, P}, "Setup_jp", 30, 50);
  fill(rng, s, inst.recipe_release, {R, I}, "Relt_ri", 5, 15);
  fill(rng, s, inst.unit_prep_time, {J, I}, "O_ji", 5, 10);
  fill(rng, s, inst.recipe_batch_cost, {R, I}, "Bpc_ri", 5, 10);
  fill(rng, s, inst.inventory_cost, {P, I}, "IC_pi", 0.05, 2);
  fill(rng, s, inst.transport_cost, {A, A, L}, "VTC_abl", 1, 10);
  for (int a = 0; a < A; ++a)
    for (int l = 0; l < L; ++l) inst.transport_cost(a, a, l) = 0.0;
  fill(rng, s, inst.line_cost, {J, I}, "LineCost_ji", 10, 15);
  fill(rng, s, inst.line_fixed_cost, {J, I}, "FCost_ji", 15, 30);
  {
    std::vector<double> minl, maxl;
    fill_ordered_pair(rng, s, minl, maxl, P, "MinLots_p", 500, 2500, "MaxLots_p", 3000, 5000);
    inst.min_lot = minl;
    inst.max_lot = maxl;
  }
  fill(rng, s, inst.demand, {D, P, A}, "Demand_dpa", 50, 100);
  for (int d = 0; d < D; ++d)
    for (int p = 0; p < P; ++p) inst.demand(d, p, 0) = 0.0;  // depot has no demand
  fill(rng, s, inst.production_rate, {J, P}, "Prate_jp", 5, 10);
  fill(rng, s, inst.unmet_cost, {A, P}, "UnmdCost_ap", 5, 15);
  {
    NdArray<double> mumin, mumax;
    std::vector<double> lo, hi;
    fill_ordered_pair(rng, s, lo, hi, R * I, "MuMin_ri", 300, 2000, "MuMax_ri", 2000, 4000);
    inst.recipe_min = NdArray<double>({R, I});
    inst.recipe_max = NdArray<double>({R, I});
    inst.recipe_min.flat() = lo;
    inst.recipe_max.flat() = hi;
  }
  inst.cooling_time_min = s.draw(rng, "CST", 420, 480);
  inst.qc_time_min = s.draw(rng, "QCTime", 240, 360);
  inst.storage_capacity = s.draw(rng, "StCapacity", 500, 5000);
  inst.big_m = 1e6;
  inst.cooling_lag_days =
      static_cast<int>(std::ceil((inst.cooling_time_min + inst.qc_time_min) / 1440.0));

  inst.validate();
  return inst;
}

}  // namespace yplan
