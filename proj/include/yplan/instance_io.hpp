#pragma once

#include <optional>
#include <string>

#include "yplan/instance.hpp"
#include "yplan/solution.hpp"

namespace yplan {

// One on-disk instance file: the planning data plus an optional robust
// configuration. Schema: top-level keys "schema_version", "sets", "subsets",
// "parameters", "robust", "cooling_lag_days"; parameter arrays are nested in
// the subscript order of their symbol keys (Demand_dpa -> [d][p][a]).
struct InstanceDocument {
  PlanningInstance instance;
  std::optional<RobustConfig> robust;
};

std::string instance_to_json(const PlanningInstance& inst, const RobustConfig* robust = nullptr);
InstanceDocument instance_from_json(const std::string& text);

void write_instance(const PlanningInstance& inst, const std::string& path,
                    const RobustConfig* robust = nullptr);
InstanceDocument read_instance(const std::string& path);

std::string solution_to_json(const PlanSolution& sol);
PlanSolution solution_from_json(const std::string& text, const PlanningInstance& inst);

void write_solution(const PlanSolution& sol, const std::string& path);
PlanSolution read_solution(const std::string& path, const PlanningInstance& inst);

}  // namespace yplan
