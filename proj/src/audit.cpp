#include "yplan/audit.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "yplan/errors.hpp"
#include "yplan/objective.hpp"

namespace yplan {

RouteTable reconstruct_routes(const PlanningInstance& inst, const PlanSolution& sol) {
  sol.check_dimensions(inst);
  const int A = inst.num_dcs;
  RouteTable table;
  for (int d = 0; d < inst.num_demand_days; ++d)
    for (int l = 0; l < inst.num_vehicles; ++l) {
      int arc_count = 0;
      std::vector<int> succ(static_cast<std::size_t>(A), -1);
      for (int a = 0; a < A; ++a)
        for (int b = 0; b < A; ++b) {
          if (a == b || !sol.arc_used(a, b, l, d)) continue;
          ++arc_count;
          if (succ[static_cast<std::size_t>(a)] != -1) {
            std::ostringstream os;
            os << "broken tour: vehicle " << l << " day " << d << " leaves DC " << a
               << " more than once";
            throw BrokenTourError(os.str());
          }
          succ[static_cast<std::size_t>(a)] = b;
        }
      if (arc_count == 0) continue;

      VehicleRoute route;
      route.day = d;
      route.vehicle = l;
      int used = 0;
      int node = 0;
      if (succ[0] == -1) {
        std::ostringstream os;
        os << "broken tour: vehicle " << l << " day " << d << " uses arcs but never leaves the depot;"
           << " stranded arcs:";
        for (int a = 0; a < A; ++a)
          if (succ[static_cast<std::size_t>(a)] != -1)
            os << " " << a << "->" << succ[static_cast<std::size_t>(a)];
        throw BrokenTourError(os.str());
      }
      do {
        const int next = succ[static_cast<std::size_t>(node)];
        if (next == -1) {
          std::ostringstream os;
          os << "broken tour: vehicle " << l << " day " << d << " strands at DC " << node;
          throw BrokenTourError(os.str());
        }
        ++used;
        node = next;
        if (node != 0) {
          RouteStop stop;
          stop.dc = node;
          stop.delivered.resize(static_cast<std::size_t>(inst.num_products));
          for (int p = 0; p < inst.num_products; ++p) {
            stop.delivered[static_cast<std::size_t>(p)] = sol.delivered(node, p, l, d);
            stop.total += sol.delivered(node, p, l, d);
          }
          route.total_load += stop.total;
          route.stops.push_back(std::move(stop));
        }
      } while (node != 0);

      if (used != arc_count) {
        std::ostringstream os;
        os << "broken tour: vehicle " << l << " day " << d << " has " << (arc_count - used)
           << " arc(s) disconnected from the depot tour; stranded arcs:";
        std::vector<bool> on_tour(static_cast<std::size_t>(A), false);
        int n = 0;
        on_tour[0] = true;
        while (succ[static_cast<std::size_t>(n)] != -1 && !on_tour[static_cast<std::size_t>(succ[static_cast<std::size_t>(n)])]) {
          n = succ[static_cast<std::size_t>(n)];
          on_tour[static_cast<std::size_t>(n)] = true;
        }
        for (int a = 0; a < A; ++a)
          if (succ[static_cast<std::size_t>(a)] != -1 && !on_tour[static_cast<std::size_t>(a)])
            os << " " << a << "->" << succ[static_cast<std::size_t>(a)];
        throw BrokenTourError(os.str());
      }
      table.routes.push_back(std::move(route));
    }
  return table;
}

void apply_routes_to_solution(const PlanningInstance& inst, const RouteTable& table,
                              PlanSolution& sol) {
  sol.arc_used.fill(0);
  for (int d = 0; d < inst.num_demand_days; ++d)
    for (int a = 0; a < inst.num_dcs; ++a) sol.visit_order(d, a) = 0.0;
  for (const VehicleRoute& route : table.routes) {
    int prev = 0;
    int pos = 1;
    for (const RouteStop& stop : route.stops) {
      sol.arc_used(prev, stop.dc, route.vehicle, route.day) = 1;
      sol.visit_order(route.day, stop.dc) = static_cast<double>(pos++);
      prev = stop.dc;
    }
    if (prev != 0) sol.arc_used(prev, 0, route.vehicle, route.day) = 1;
  }
}

AuditResult audit(const PlanningInstance& inst, const PlanSolution& sol,
                  const RobustConfig* robust, const CheckOptions& opts) {
  AuditResult result;
  result.routes = reconstruct_routes(inst, sol);
  result.reports = check_constraints(inst, sol, robust, opts);
  result.feasible = result.reports.empty();
  result.objective = evaluate_objective(inst, sol, robust);
  return result;
}

GapReport gap(double z_heuristic, double z_exact) {
  if (!std::isfinite(z_heuristic) || !std::isfinite(z_exact))
    throw ValidationError("gap inputs must be finite");
  if (z_heuristic <= 0.0 || z_exact <= 0.0)
    throw ValidationError("gap inputs must be positive");
  GapReport g;
  g.z_heuristic = z_heuristic;
  g.z_exact = z_exact;
  g.gap_vs_heuristic = (z_heuristic - z_exact) / z_heuristic;
  g.improvement_vs_exact = (z_exact - z_heuristic) / z_exact;
  return g;
}

std::string audit_report_json(const AuditResult& result) {
  nlohmann::ordered_json j;
  j["feasible"] = result.feasible;
  j["num_violations"] = result.reports.size();
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    nlohmann::ordered_json rj;
    rj["constraint"] = r.constraint_id;
    rj["index"] = r.index_tuple;
    rj["lhs"] = r.lhs;
    rj["rhs"] = r.rhs;
    rj["violation"] = r.violation;
    reports.push_back(std::move(rj));
  }
  j["violations"] = std::move(reports);
  nlohmann::ordered_json obj;
  obj["variable_production"] = result.objective.variable_production;
  obj["inventory_holding"] = result.objective.inventory_holding;
  obj["recipe_preparation"] = result.objective.recipe_preparation;
  obj["changeover"] = result.objective.changeover;
  obj["overtime"] = result.objective.overtime;
  obj["unmet_demand"] = result.objective.unmet_demand;
  obj["line_utilization"] = result.objective.line_utilization;
  obj["transportation"] = result.objective.transportation;
  obj["robust_penalty"] = result.objective.robust_penalty;
  obj["total"] = result.objective.total;
  j["objective"] = std::move(obj);
  nlohmann::ordered_json routes = nlohmann::ordered_json::array();
  for (const auto& route : result.routes.routes) {
    nlohmann::ordered_json rj;
    rj["day"] = route.day;
    rj["vehicle"] = route.vehicle;
    std::vector<int> stops;
    for (const auto& s : route.stops) stops.push_back(s.dc);
    rj["stops"] = stops;
    rj["total_load"] = route.total_load;
    routes.push_back(std::move(rj));
  }
  j["routes"] = std::move(routes);
  return j.dump(2) + "\n";
}

std::string route_table_text(const RouteTable& table) {
  std::ostringstream os;
  os << "period  route  schedule                      served  total\n";
  for (const auto& route : table.routes) {
    std::ostringstream sched;
    for (std::size_t k = 0; k < route.stops.size(); ++k) {
      if (k > 0) sched << " -> ";
      sched << route.stops[k].dc;
    }
    os << "  " << (route.day + 1) << "       " << (route.vehicle + 1) << "    ";
    std::string sstr = sched.str();
    sstr.resize(30, ' ');
    os << sstr << route.stops.size() << "     " << route.total_load << "\n";
  }
  return os.str();
}

}  // namespace yplan
