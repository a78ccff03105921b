#include <doctest.h>

#include "yplan/case_study.hpp"

using namespace yplan;

TEST_SUITE("case_study") {

TEST_CASE("fixture shape matches the recorded operation") {
  const PlanningInstance inst = case_study();
  CHECK(inst.num_dcs == 11);
  CHECK(inst.num_products == 6);
  CHECK(inst.num_families == 2);
  CHECK(inst.num_lines == 2);
  CHECK(inst.num_vehicles == 3);
  CHECK(inst.num_demand_days == 5);
  CHECK(inst.cooling_lag_days == 1);
  for (int l = 0; l < 3; ++l) {
    CHECK(inst.truck_min_load[static_cast<std::size_t>(l)] == 500.0);
    CHECK(inst.truck_max_load[static_cast<std::size_t>(l)] == 1500.0);
  }
  for (int i = 0; i < 5; ++i) {
    CHECK(inst.regular_time[static_cast<std::size_t>(i)] == 480.0);
    CHECK(inst.max_time[static_cast<std::size_t>(i)] == 720.0);
  }
  // Two families: set (cream, low-fat, traditional) and stirred (rest).
  CHECK(inst.family_of_product[kCream] == 0);
  CHECK(inst.family_of_product[kLowFat] == 0);
  CHECK(inst.family_of_product[kTraditionalStrained] == 0);
  CHECK(inst.family_of_product[kEggplant] == 1);
  CHECK(inst.family_of_product[kStrawberry] == 1);
  CHECK(inst.family_of_product[kCucumber] == 1);
}

TEST_CASE("recorded demand spot values") {
  const PlanningInstance inst = case_study();
  CHECK(inst.demand(0, kCream, 1) == 65.0);
  double day1_canbo8 = 0.0;
  for (int p = 0; p < 6; ++p) day1_canbo8 += inst.demand(0, p, 8);
  CHECK(day1_canbo8 == 521.0);
  double day5_canbo7 = 0.0;
  for (int p = 0; p < 6; ++p) day5_canbo7 += inst.demand(4, p, 7);
  CHECK(day5_canbo7 == 370.0);
}

TEST_CASE("fixture is deterministic") {
  const PlanningInstance a = case_study();
  const PlanningInstance b = case_study();
  CHECK(a.demand == b.demand);
  CHECK(a.transport_cost == b.transport_cost);
  CHECK(a.variable_cost == b.variable_cost);
}

TEST_CASE("reference route list covers five periods of three routes") {
  const auto routes = case_study_reference_routes();
  REQUIRE(routes.size() == 15);
  int per_period[5] = {0, 0, 0, 0, 0};
  for (const auto& r : routes) {
    per_period[r.period]++;
    CHECK(!r.stops.empty());
  }
  for (int d = 0; d < 5; ++d) CHECK(per_period[d] == 3);
  // Every Canbo branch appears exactly once per period.
  for (int d = 0; d < 5; ++d) {
    std::vector<int> seen;
    for (const auto& r : routes)
      if (r.period == d)
        for (int s : r.stops) seen.push_back(s);
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  }
}

}  // TEST_SUITE
