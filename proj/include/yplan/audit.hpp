#pragma once

#include <string>
#include <vector>

#include "yplan/constraints.hpp"
#include "yplan/instance.hpp"
#include "yplan/solution.hpp"

namespace yplan {

struct RouteStop {
  int dc = 0;                      // DC index (1..A-1)
  std::vector<double> delivered;   // per product (kg)
  double total = 0.0;
};

struct VehicleRoute {
  int day = 0;
  int vehicle = 0;
  std::vector<RouteStop> stops;    // in visit order, depot implied at both ends
  double total_load = 0.0;         // sum of per-stop deliveries
};

// Ordered by (day, vehicle); vehicles without arcs on a day are omitted.
struct RouteTable {
  std::vector<VehicleRoute> routes;
};

// Follows arc successors from the depot for every (vehicle, day). Throws
// BrokenTourError listing stranded arcs when the arc set is not a
// depot-rooted tour.
RouteTable reconstruct_routes(const PlanningInstance& inst, const PlanSolution& sol);

// Writes a route table's arcs and visit order back into a solution
// (inverse of reconstruction; deliveries are left untouched).
void apply_routes_to_solution(const PlanningInstance& inst, const RouteTable& table,
                              PlanSolution& sol);

struct AuditResult {
  bool feasible = false;
  std::vector<ConstraintReport> reports;
  ObjectiveBreakdown objective;
  RouteTable routes;
};

AuditResult audit(const PlanningInstance& inst, const PlanSolution& sol,
                  const RobustConfig* robust = nullptr, const CheckOptions& opts = {});

// Heuristic-vs-exact deviation measures.
struct GapReport {
  double z_heuristic = 0.0;
  double z_exact = 0.0;
  double gap_vs_heuristic = 0.0;     // (z_h - z_e) / z_h
  double improvement_vs_exact = 0.0; // (z_e - z_h) / z_e
};

// Throws ValidationError unless both inputs are finite and positive.
GapReport gap(double z_heuristic, double z_exact);

// Structured audit report (JSON document).
std::string audit_report_json(const AuditResult& result);

// Human-readable table: route, number of served DCs, total transported.
std::string route_table_text(const RouteTable& table);

}  // namespace yplan
