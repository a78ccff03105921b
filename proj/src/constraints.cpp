#include "yplan/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace yplan {

namespace {

using Reports = std::vector<ConstraintReport>;

struct Ctx {
  const PlanningInstance& inst;
  const PlanSolution& sol;
  const RobustConfig* robust;
  CheckOptions opts;
  std::vector<std::vector<int>> pf;  // P_f
  std::vector<std::vector<int>> pr;  // P_r
  std::vector<bool> active_day;      // tour constraints apply on this day
};

void add_ineq(Reports& out, const char* id, std::vector<int> index, double lhs, double rhs,
              double tol) {
  if (lhs > rhs + tol)
    out.push_back({id, std::move(index), lhs, rhs, lhs - rhs});
}

// Equalities report the violated side as lhs so violation = max(0, lhs - rhs).
void add_eq(Reports& out, const char* id, std::vector<int> index, double lhs, double rhs,
            double tol) {
  if (std::abs(lhs - rhs) > tol) {
    if (lhs < rhs) std::swap(lhs, rhs);
    out.push_back({id, std::move(index), lhs, rhs, lhs - rhs});
  }
}

bool in(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void check_c2_c3(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int p = 0; p < inst.num_products; ++p)
    for (int i = 0; i < inst.num_production_days; ++i) {
      double rhs = (i == 0) ? 0.0 : sol.inventory(p, i - 1);
      rhs += sol.total_production(p, i);
      if (i < inst.num_demand_days) rhs -= depot_shipment(inst, sol, p, i);
      add_eq(out, i == 0 ? "C2" : "C3", {p, i}, sol.inventory(p, i), rhs, c.opts.tolerance);
    }
}

void check_c4_c6(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int i = 0; i < inst.num_production_days; ++i)
    add_ineq(out, "C4", {i},
             inst.regular_time[static_cast<std::size_t>(i)] + sol.overtime[static_cast<std::size_t>(i)],
             inst.max_time[static_cast<std::size_t>(i)], c.opts.tolerance);
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i) {
      const double m5 = c.opts.paper_strict ? inst.big_m : inst.max_time[static_cast<std::size_t>(i)];
      add_ineq(out, "C5", {f, i},
               sol.family_makespan(f, i) - inst.regular_time[static_cast<std::size_t>(i)],
               m5 * sol.overtime[static_cast<std::size_t>(i)], c.opts.tolerance);
      add_ineq(out, "C6", {f, i}, sol.family_makespan(f, i),
               inst.regular_time[static_cast<std::size_t>(i)] + sol.overtime[static_cast<std::size_t>(i)],
               c.opts.tolerance);
    }
}

void check_c7_c8(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i) {
      double ct_sum = 0.0, pt_sum = 0.0;
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)]) {
        ct_sum += sol.completion_time(f, j, i);
        pt_sum += sol.processing_time(f, j, i);
      }
      add_eq(out, "C7", {f, i}, sol.family_makespan(f, i), ct_sum, c.opts.tolerance);
      add_ineq(out, "C8", {f, i}, pt_sum, sol.family_makespan(f, i), c.opts.tolerance);
    }
}

void check_c9_c10(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int r = 0; r < inst.num_recipes; ++r)
    for (int i = 0; i < inst.num_production_days; ++i) {
      double q = 0.0;
      for (int p : c.pr[static_cast<std::size_t>(r)])
        for (int j : inst.lines_for_product[static_cast<std::size_t>(p)]) q += sol.production(p, j, i);
      const double g = sol.recipe_used(r, i) ? 1.0 : 0.0;
      add_ineq(out, "C9", {r, i}, inst.recipe_min(r, i) * g, q, c.opts.tolerance);
      add_ineq(out, "C10", {r, i}, q, inst.recipe_max(r, i) * g, c.opts.tolerance);
    }
}

void check_c11_c12(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int j = 0; j < inst.num_lines; ++j)
    for (int i = 0; i < inst.num_production_days; ++i) {
      const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
      double x_sum = 0.0, y_sum = 0.0;
      for (int f : fj) {
        y_sum += sol.family_assigned(f, j, i);
        for (int e : fj)
          if (e != f) x_sum += sol.sequence(f, e, j, i);
      }
      add_eq(out, "C11", {j, i}, x_sum + sol.line_used(j, i), y_sum, c.opts.tolerance);
    }
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)])
        add_ineq(out, "C12", {f, i, j}, static_cast<double>(sol.family_assigned(f, j, i)),
                 static_cast<double>(sol.line_used(j, i)), c.opts.tolerance);
}

void check_c13_c14(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int p = 0; p < inst.num_products; ++p)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_product[static_cast<std::size_t>(p)]) {
        const double yb = sol.product_assigned(p, j, i) ? 1.0 : 0.0;
        add_ineq(out, "C13", {p, i, j}, yb * inst.min_lot[static_cast<std::size_t>(p)],
                 sol.production(p, j, i), c.opts.tolerance);
        add_ineq(out, "C14", {p, i, j}, sol.production(p, j, i),
                 yb * inst.max_lot[static_cast<std::size_t>(p)], c.opts.tolerance);
      }
}

void check_c15_c18(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)]) {
        double yb_sum = 0.0;
        for (int p : c.pf[static_cast<std::size_t>(f)]) {
          if (in(inst.lines_for_product[static_cast<std::size_t>(p)], j)) {
            add_ineq(out, "C15", {f, i, j, p}, static_cast<double>(sol.product_assigned(p, j, i)),
                     static_cast<double>(sol.family_assigned(f, j, i)), c.opts.tolerance);
            yb_sum += sol.product_assigned(p, j, i);
          }
        }
        add_ineq(out, "C16", {f, i, j}, static_cast<double>(sol.family_assigned(f, j, i)), yb_sum,
                 c.opts.tolerance);
        const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
        double succ = 0.0, pred = 0.0;
        for (int e : fj)
          if (e != f) {
            succ += sol.sequence(f, e, j, i);
            pred += sol.sequence(e, f, j, i);
          }
        add_ineq(out, "C17", {f, i, j}, succ, static_cast<double>(sol.family_assigned(f, j, i)),
                 c.opts.tolerance);
        add_ineq(out, "C18", {f, i, j}, pred, static_cast<double>(sol.family_assigned(f, j, i)),
                 c.opts.tolerance);
      }
}

void check_c19_c20(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int p = 0; p < inst.num_products; ++p)
    for (int i = 0; i < inst.num_production_days; ++i) {
      double q = 0.0;
      for (int j : inst.lines_for_product[static_cast<std::size_t>(p)]) q += sol.production(p, j, i);
      add_eq(out, "C19", {p, i}, sol.total_production(p, i), q, c.opts.tolerance);
    }
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)]) {
        double pt = 0.0;
        for (int p : c.pf[static_cast<std::size_t>(f)])
          if (in(inst.lines_for_product[static_cast<std::size_t>(p)], j))
            pt += sol.production(p, j, i) / inst.production_rate(j, p) +
                  inst.setup_time(j, p) * sol.product_assigned(p, j, i);
        add_eq(out, "C20", {f, i, j}, sol.processing_time(f, j, i), pt, c.opts.tolerance);
      }
}

// Vehicle load window on the depot-departure arc.
void check_c21_c22(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int a = 1; a < inst.num_dcs; ++a)
    for (int l = 0; l < inst.num_vehicles; ++l)
      for (int d = 0; d < inst.num_demand_days; ++d) {
        const double zv = sol.arc_used(0, a, l, d) ? 1.0 : 0.0;
        add_ineq(out, "C21", {a, l, d}, inst.truck_min_load[static_cast<std::size_t>(l)] * zv,
                 sol.arc_flow(0, a, l, d), c.opts.tolerance);
        add_ineq(out, "C22", {a, l, d}, sol.arc_flow(0, a, l, d),
                 inst.truck_max_load[static_cast<std::size_t>(l)] * zv, c.opts.tolerance);
      }
}

void check_c23_c26(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int d = 0; d < inst.num_demand_days; ++d) {
    if (!c.active_day[static_cast<std::size_t>(d)]) continue;
    for (int l = 0; l < inst.num_vehicles; ++l) {
      double depart = 0.0, ret = 0.0;
      for (int a = 1; a < inst.num_dcs; ++a) {
        depart += sol.arc_used(0, a, l, d);
        ret += sol.arc_used(a, 0, l, d);
      }
      add_eq(out, "C23", {l, d}, depart, 1.0, c.opts.tolerance);
      add_eq(out, "C26", {l, d}, ret, 1.0, c.opts.tolerance);
    }
  }
}

void check_c24_c25(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int a = 0; a < inst.num_dcs; ++a)
    for (int l = 0; l < inst.num_vehicles; ++l)
      for (int d = 0; d < inst.num_demand_days; ++d) {
        double outdeg = 0.0, indeg = 0.0;
        for (int b = 0; b < inst.num_dcs; ++b)
          if (b != a) {
            outdeg += sol.arc_used(a, b, l, d);
            indeg += sol.arc_used(b, a, l, d);
          }
        add_eq(out, "C24", {a, l, d}, outdeg, indeg, c.opts.tolerance);
      }
  for (int b = 1; b < inst.num_dcs; ++b)
    for (int d = 0; d < inst.num_demand_days; ++d) {
      if (!c.active_day[static_cast<std::size_t>(d)]) continue;
      double visits = 0.0;
      for (int a = 0; a < inst.num_dcs; ++a)
        if (a != b)
          for (int l = 0; l < inst.num_vehicles; ++l) visits += sol.arc_used(a, b, l, d);
      add_eq(out, "C25", {b, d}, visits, 1.0, c.opts.tolerance);
    }
}

void check_c27_c28(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  const int A = inst.num_dcs;
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b) {
      if (a == b) continue;
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d) {
          double uv = 0.0;
          for (int p = 0; p < inst.num_products; ++p) uv += sol.arc_product_flow(a, b, p, l, d);
          add_eq(out, "C27", {a, b, l, d}, sol.arc_flow(a, b, l, d), uv, c.opts.tolerance);
        }
    }
  // Per-product conservation at customer nodes: arrivals = drop + departures.
  if (!c.opts.paper_strict) {
    for (int b = 1; b < A; ++b)
      for (int p = 0; p < inst.num_products; ++p)
        for (int l = 0; l < inst.num_vehicles; ++l)
          for (int d = 0; d < inst.num_demand_days; ++d) {
            double inflow = 0.0, outflow = 0.0;
            for (int a = 0; a < A; ++a)
              if (a != b) {
                inflow += sol.arc_product_flow(a, b, p, l, d);
                outflow += sol.arc_product_flow(b, a, p, l, d);
              }
            add_eq(out, "C27b", {b, p, l, d}, inflow, sol.delivered(b, p, l, d) + outflow,
                   c.opts.tolerance);
          }
  }
  for (int a = 1; a < A; ++a)
    for (int p = 0; p < inst.num_products; ++p)
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d) {
          double inflow = 0.0;
          for (int b = 0; b < A; ++b)
            if (b != a) inflow += sol.arc_product_flow(b, a, p, l, d);
          add_ineq(out, "C28", {a, p, l, d}, sol.delivered(a, p, l, d), inflow, c.opts.tolerance);
        }
}

void check_c29_c31(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  const int A = inst.num_dcs;
  for (int a = 1; a < A; ++a)
    for (int l = 0; l < inst.num_vehicles; ++l)
      for (int d = 0; d < inst.num_demand_days; ++d) {
        const double m = c.opts.paper_strict ? inst.big_m : inst.truck_max_load[static_cast<std::size_t>(l)];
        add_ineq(out, "C29", {a, l, d}, sol.arc_flow(a, 0, l, d),
                 m * sol.arc_used(a, 0, l, d), c.opts.tolerance);
        for (int b = 1; b < A; ++b) {
          if (b == a) continue;
          add_ineq(out, "C30", {a, b, l, d}, sol.arc_flow(a, b, l, d),
                   m * sol.arc_used(a, b, l, d), c.opts.tolerance);
        }
      }
  const double m31 = c.opts.paper_strict ? inst.big_m : static_cast<double>(A);
  for (int a = 1; a < A; ++a)
    for (int b = 1; b < A; ++b) {
      if (a == b) continue;
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d)
          add_ineq(out, "C31", {a, b, l, d},
                   sol.visit_order(d, a) - sol.visit_order(d, b) + m31 * sol.arc_used(a, b, l, d),
                   m31 - 1.0, c.opts.tolerance);
    }
}

void check_c32_c34(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)]) {
        const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
        double cht_in = 0.0;
        for (int e : fj)
          if (e != f) cht_in += inst.changeover_time(e, f, j) * sol.sequence(e, f, j, i);
        for (int r : inst.recipes_for_family[static_cast<std::size_t>(f)]) {
          const double overhead =
              inst.daily_opening(j, i) + inst.recipe_prep_time[static_cast<std::size_t>(r)] +
              std::max(inst.unit_prep_time(j, i), inst.recipe_release(r, i));
          add_ineq(out, "C32", {f, i, j, r},
                   overhead * sol.family_assigned(f, j, i) + cht_in,
                   sol.completion_time(f, j, i) - sol.processing_time(f, j, i), c.opts.tolerance);
        }
        add_ineq(out, "C33", {f, i, j}, sol.completion_time(f, j, i),
                 (inst.shift_length(j, i) - inst.daily_shutdown(j, i)) * sol.family_assigned(f, j, i),
                 c.opts.tolerance);
        for (int e : fj) {
          if (e == f) continue;
          const double wsh = inst.shift_length(j, i) - inst.daily_shutdown(j, i);
          const double m34 = c.opts.paper_strict
                                 ? inst.big_m
                                 : 2.0 * wsh + inst.changeover_time(f, e, j);
          add_ineq(out, "C34", {f, e, j, i},
                   sol.completion_time(f, j, i) + inst.changeover_time(f, e, j),
                   sol.completion_time(e, j, i) - sol.processing_time(e, j, i) +
                       m34 * (1.0 - sol.sequence(f, e, j, i)),
                   c.opts.tolerance);
        }
      }
}

void check_c35_c36(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int r = 0; r < inst.num_recipes; ++r)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int f : inst.families_of_recipe[static_cast<std::size_t>(r)])
        for (int j : inst.lines_for_family[static_cast<std::size_t>(f)])
          add_ineq(out, "C35", {r, i, f, j}, static_cast<double>(sol.family_assigned(f, j, i)),
                   static_cast<double>(sol.recipe_used(r, i)), c.opts.tolerance);
  for (int j = 0; j < inst.num_lines; ++j)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int f : inst.families_on_line[static_cast<std::size_t>(j)])
        add_ineq(out, "C36", {j, i, f}, sol.completion_time(f, j, i), sol.line_makespan(j, i),
                 c.opts.tolerance);
}

void check_c37_c38(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int i = 0; i < inst.num_production_days; ++i) {
    double pallets = 0.0, produced = 0.0;
    for (int p = 0; p < inst.num_products; ++p) {
      pallets += sol.inventory(p, i) * inst.pallet_factor[static_cast<std::size_t>(p)];
      produced += sol.total_production(p, i);
    }
    add_ineq(out, "C37", {i}, pallets, inst.storage_capacity, c.opts.tolerance);
    add_ineq(out, "C38", {i}, produced, inst.plant_capacity[static_cast<std::size_t>(i)],
             c.opts.tolerance);
  }
}

void check_c39_c40(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int j = 0; j < inst.num_lines; ++j)
    for (int i = 0; i < inst.num_production_days; ++i) {
      const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
      double pt_sum = 0.0, cht_sum = 0.0;
      for (int f : fj) {
        pt_sum += sol.processing_time(f, j, i);
        for (int e : fj)
          if (e != f) cht_sum += inst.changeover_time(f, e, j) * sol.sequence(f, e, j, i);
      }
      double min_pret = 0.0;
      const auto& rj = inst.recipes_on_line[static_cast<std::size_t>(j)];
      if (!rj.empty()) {
        min_pret = std::numeric_limits<double>::infinity();
        for (int r : rj)
          min_pret = std::min(min_pret, inst.recipe_prep_time[static_cast<std::size_t>(r)]);
      }
      const double budget = inst.shift_length(j, i) - inst.daily_shutdown(j, i) -
                            inst.daily_opening(j, i) - min_pret;
      add_ineq(out, "C39", {j, i}, pt_sum + cht_sum, budget * sol.line_used(j, i),
               c.opts.tolerance);
    }
  for (int f = 0; f < inst.num_families; ++f)
    for (int i = 0; i < inst.num_production_days; ++i)
      for (int j : inst.lines_for_family[static_cast<std::size_t>(f)]) {
        const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
        double cht_out = 0.0;
        for (int e : fj)
          if (e != f) cht_out += inst.changeover_time(f, e, j) * sol.sequence(f, e, j, i);
        for (int r : inst.recipes_for_family[static_cast<std::size_t>(f)]) {
          const double budget = inst.shift_length(j, i) - inst.daily_shutdown(j, i) -
                                inst.daily_opening(j, i) -
                                inst.recipe_prep_time[static_cast<std::size_t>(r)];
          add_ineq(out, "C40", {f, i, j, r}, sol.processing_time(f, j, i) + cht_out,
                   budget * sol.family_assigned(f, j, i), c.opts.tolerance);
        }
      }
}

void check_c41(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  for (int a = 1; a < inst.num_dcs; ++a)
    for (int d = 0; d < inst.num_demand_days; ++d)
      for (int p = 0; p < inst.num_products; ++p) {
        double served = 0.0;
        for (int l = 0; l < inst.num_vehicles; ++l) served += sol.delivered(a, p, l, d);
        double lhs = inst.demand(d, p, a);
        if (c.robust != nullptr) lhs -= c.robust->slack(d, p, a);
        add_ineq(out, "C41", {a, d, p}, lhs, served + sol.unmet(a, d, p), c.opts.tolerance);
      }
  // Delivery at a DC requires a vehicle visiting it.
  for (int a = 1; a < inst.num_dcs; ++a)
    for (int p = 0; p < inst.num_products; ++p)
      for (int l = 0; l < inst.num_vehicles; ++l)
        for (int d = 0; d < inst.num_demand_days; ++d) {
          double visit = 0.0;
          for (int b = 0; b < inst.num_dcs; ++b)
            if (b != a) visit += sol.arc_used(b, a, l, d);
          const double m = c.opts.paper_strict ? inst.big_m
                                                : inst.truck_max_load[static_cast<std::size_t>(l)];
          add_ineq(out, "C41b", {a, p, l, d}, sol.delivered(a, p, l, d), m * visit,
                   c.opts.tolerance);
        }
}

void check_c42(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  const int S = inst.cooling_lag_days;
  for (int p = 0; p < inst.num_products; ++p)
    for (int d = 0; d < inst.num_demand_days; ++d) {
      const int i = d - S;
      if (i < 0 || i >= inst.num_production_days) continue;
      const double cap = inst.freshness_gate_open(p) ? sol.inventory(p, i) : 0.0;
      add_ineq(out, "C42", {p, d}, depot_shipment(inst, sol, p, d), cap, c.opts.tolerance);
    }
}

void check_c43(const Ctx& c, Reports& out) {
  const auto& inst = c.inst;
  const auto& sol = c.sol;
  const double tol = c.opts.tolerance;
  auto neg = [&](const NdArray<double>& arr, int field_code) {
    double worst = 0.0;
    for (double x : arr.flat()) worst = std::min(worst, x);
    if (worst < -tol) add_ineq(out, "C43", {field_code}, -worst, 0.0, tol);
  };
  // field codes: 0..11 continuous arrays, 12 binaries, 13 diagonal X, 14 structural zeros
  neg(sol.production, 0);
  neg(sol.total_production, 1);
  neg(sol.inventory, 2);
  neg(sol.unmet, 3);
  neg(sol.delivered, 4);
  neg(sol.arc_product_flow, 5);
  neg(sol.arc_flow, 6);
  neg(sol.processing_time, 7);
  neg(sol.completion_time, 8);
  neg(sol.family_makespan, 9);
  neg(sol.line_makespan, 10);
  double worst_ot = 0.0;
  for (double x : sol.overtime) worst_ot = std::min(worst_ot, x);
  if (worst_ot < -tol) add_ineq(out, "C43", {11}, -worst_ot, 0.0, tol);

  auto binary = [&](const NdArray<std::uint8_t>& arr) {
    for (std::uint8_t x : arr.flat())
      if (x > 1) return false;
    return true;
  };
  if (!binary(sol.line_used) || !binary(sol.recipe_used) || !binary(sol.sequence) ||
      !binary(sol.family_assigned) || !binary(sol.product_assigned) || !binary(sol.arc_used))
    add_ineq(out, "C43", {12}, 1.0, 0.0, tol);

  for (int f = 0; f < inst.num_families; ++f)
    for (int j = 0; j < inst.num_lines; ++j)
      for (int i = 0; i < inst.num_production_days; ++i)
        if (sol.sequence(f, f, j, i)) {
          add_ineq(out, "C43", {13, f, j, i}, 1.0, 0.0, tol);
        }

  // Variables outside the admissible index sets must be zero.
  double structural = 0.0;
  for (int p = 0; p < inst.num_products; ++p)
    for (int j = 0; j < inst.num_lines; ++j) {
      if (in(inst.lines_for_product[static_cast<std::size_t>(p)], j)) continue;
      for (int i = 0; i < inst.num_production_days; ++i)
        structural += sol.production(p, j, i) + sol.product_assigned(p, j, i);
    }
  for (int f = 0; f < inst.num_families; ++f)
    for (int j = 0; j < inst.num_lines; ++j) {
      if (in(inst.lines_for_family[static_cast<std::size_t>(f)], j)) continue;
      for (int i = 0; i < inst.num_production_days; ++i)
        structural += sol.family_assigned(f, j, i) + sol.processing_time(f, j, i) +
                      sol.completion_time(f, j, i);
    }
  for (int j = 0; j < inst.num_lines; ++j) {
    const auto& fj = inst.families_on_line[static_cast<std::size_t>(j)];
    for (int f = 0; f < inst.num_families; ++f)
      for (int e = 0; e < inst.num_families; ++e) {
        if (f != e && in(fj, f) && in(fj, e)) continue;
        if (f == e) continue;  // diagonal handled above
        for (int i = 0; i < inst.num_production_days; ++i)
          structural += sol.sequence(f, e, j, i);
      }
  }
  if (structural > tol) add_ineq(out, "C43", {14}, structural, 0.0, tol);
}

std::vector<std::function<void(const Ctx&, Reports&)>> constraint_jobs() {
  return {check_c2_c3,   check_c4_c6,   check_c7_c8,   check_c9_c10,  check_c11_c12,
          check_c13_c14, check_c15_c18, check_c19_c20, check_c21_c22, check_c23_c26,
          check_c24_c25, check_c27_c28, check_c29_c31, check_c32_c34, check_c35_c36,
          check_c37_c38, check_c39_c40, check_c41,     check_c42,     check_c43};
}

Ctx make_ctx(const PlanningInstance& inst, const PlanSolution& sol, const RobustConfig* robust,
             const CheckOptions& opts) {
  sol.check_dimensions(inst);
  if (robust != nullptr) robust->validate(inst);
  Ctx c{inst, sol, robust, opts, inst.products_of_family(), inst.products_of_recipe(), {}};
  c.active_day.resize(static_cast<std::size_t>(inst.num_demand_days));
  for (int d = 0; d < inst.num_demand_days; ++d)
    c.active_day[static_cast<std::size_t>(d)] =
        opts.paper_strict || !day_is_inactive(inst, sol, d, opts.tolerance);
  return c;
}

int rank_of(const std::string& id) {
  // C2 < C3 < ... < C27 < C27b < C28 ... C41 < C41b < C42 < C43
  int n = 0;
  std::size_t k = 1;
  while (k < id.size() && id[k] >= '0' && id[k] <= '9') n = n * 10 + (id[k++] - '0');
  return n * 2 + (k < id.size() ? 1 : 0);
}

void sort_reports(Reports& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ConstraintReport& a, const ConstraintReport& b) {
                     const int ra = rank_of(a.constraint_id), rb = rank_of(b.constraint_id);
                     if (ra != rb) return ra < rb;
                     return a.index_tuple < b.index_tuple;
                   });
}

}  // namespace

double depot_shipment(const PlanningInstance& inst, const PlanSolution& sol, int p, int d) {
  double s = 0.0;
  for (int l = 0; l < inst.num_vehicles; ++l)
    for (int a = 1; a < inst.num_dcs; ++a) s += sol.arc_product_flow(0, a, p, l, d);
  return s;
}

bool day_is_inactive(const PlanningInstance& inst, const PlanSolution& sol, int d,
                     double tolerance) {
  for (int l = 0; l < inst.num_vehicles; ++l)
    for (int a = 0; a < inst.num_dcs; ++a)
      for (int b = 0; b < inst.num_dcs; ++b)
        if (a != b && sol.arc_used(a, b, l, d)) return false;
  for (int a = 1; a < inst.num_dcs; ++a)
    for (int p = 0; p < inst.num_products; ++p)
      for (int l = 0; l < inst.num_vehicles; ++l)
        if (sol.delivered(a, p, l, d) > tolerance) return false;
  return true;
}

std::vector<ConstraintReport> check_constraints(const PlanningInstance& inst,
                                                const PlanSolution& sol,
                                                const RobustConfig* robust,
                                                const CheckOptions& opts) {
  const Ctx c = make_ctx(inst, sol, robust, opts);
  Reports out;
  for (const auto& job : constraint_jobs()) job(c, out);
  sort_reports(out);
  return out;
}

std::vector<ConstraintReport> check_constraints_parallel(const PlanningInstance& inst,
                                                         const PlanSolution& sol,
                                                         const RobustConfig* robust,
                                                         const CheckOptions& opts) {
  const Ctx c = make_ctx(inst, sol, robust, opts);
  const auto jobs = constraint_jobs();
  std::vector<Reports> partial(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int k = 0; k < static_cast<int>(jobs.size()); ++k)
    jobs[static_cast<std::size_t>(k)](c, partial[static_cast<std::size_t>(k)]);
  Reports out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  sort_reports(out);
  return out;
}

}  // namespace yplan
