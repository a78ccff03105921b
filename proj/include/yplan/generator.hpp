#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "yplan/instance.hpp"

namespace yplan {

enum class SizeClass { kSmall, kMedium, kLarge };

SizeClass size_class_from_string(const std::string& s);
std::string to_string(SizeClass s);

// Seeded random-instance request. Overrides replace the sampling range of a
// set ("a", "f", "j", "l", "p", "d", "r", "i") or a parameter (its symbol,
// e.g. "Demand_dpa", "MinTC_l"); both bounds inclusive for sets.
struct GenSpec {
  SizeClass size_class = SizeClass::kSmall;
  std::uint64_t seed = 0;
  std::map<std::string, std::pair<double, double>> overrides;
};

// Draws one instance. Set cardinalities use inclusive discrete uniform
// ranges, parameters continuous uniform ranges; subsets are uniform with a
// repair pass guaranteeing every family at least one product, one feasible
// line, and one recipe. A fixed seed fully determines the result.
PlanningInstance generate(const GenSpec& spec);

}  // namespace yplan
