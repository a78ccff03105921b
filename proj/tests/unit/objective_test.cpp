#include <doctest.h>

#include "helpers.hpp"
#include "yplan/errors.hpp"
#include "yplan/objective.hpp"

using namespace yplan;

TEST_SUITE("objective") {

TEST_CASE("all-zero solution costs nothing") {
  auto inst = testutil::toy_instance({.customers = 2, .products = 2, .days = 2});
  const PlanSolution sol = PlanSolution::zeros(inst);
  const ObjectiveBreakdown b = evaluate_objective(inst, sol);
  CHECK(b.variable_production == 0.0);
  CHECK(b.inventory_holding == 0.0);
  CHECK(b.recipe_preparation == 0.0);
  CHECK(b.changeover == 0.0);
  CHECK(b.overtime == 0.0);
  CHECK(b.unmet_demand == 0.0);
  CHECK(b.line_utilization == 0.0);
  CHECK(b.transportation == 0.0);
  CHECK(b.robust_penalty == 0.0);
  CHECK(b.total == 0.0);
}

TEST_CASE("alpha = 1 kills the robust penalty") {
  auto inst = testutil::toy_instance({.customers = 2, .products = 2, .days = 2});
  inst.demand(0, 0, 1) = 80.0;
  const RobustConfig rc = RobustConfig::defaults_for(inst, 1.0, 25.0);
  const PlanSolution sol = PlanSolution::zeros(inst);
  const ObjectiveBreakdown b = evaluate_objective(inst, sol, &rc);
  CHECK(b.robust_penalty == 0.0);
}

TEST_CASE("single-product direct substitution") {
  auto inst = testutil::toy_instance();
  inst.variable_cost[0] = 0.1;
  inst.inventory_cost(0, 0) = 0.05;
  PlanSolution sol = PlanSolution::zeros(inst);
  sol.production(0, 0, 0) = 100.0;
  sol.inventory(0, 0) = 60.0;
  const ObjectiveBreakdown b = evaluate_objective(inst, sol);
  CHECK(b.variable_production == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(b.inventory_holding == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(b.total == doctest::Approx(13.0).epsilon(1e-12));
}

TEST_CASE("total equals the sum of its parts") {
  auto inst = testutil::toy_instance({.customers = 3, .products = 2, .lines = 2,
                                      .vehicles = 2, .days = 3, .families = 2});
  inst.variable_cost = {0.1, 0.2};
  inst.overtime_cost.assign(3, 2.0);
  for (double& x : inst.inventory_cost.flat()) x = 0.3;
  for (double& x : inst.recipe_batch_cost.flat()) x = 7.0;
  for (double& x : inst.changeover_cost.flat()) x = 4.0;
  for (double& x : inst.line_cost.flat()) x = 5.0;
  for (double& x : inst.line_fixed_cost.flat()) x = 6.0;
  inst.truck_fixed_cost.assign(2, 110.0);
  for (int d = 0; d < 3; ++d)
    for (int p = 0; p < 2; ++p)
      for (int a = 1; a < 4; ++a) inst.demand(d, p, a) = 60.0;

  testutil::SimDay day;
  day.quantities = {{120.0, 80.0}, {50.0, 0.0}};
  day.routes = {{1, 2}, {3}};
  day.deliveries[1] = {20.0, 10.0};
  day.deliveries[2] = {15.0, 5.0};
  day.deliveries[3] = {30.0, 0.0};
  // Day 0 ships same-day (allowed before the cooling lag elapses).
  const PlanSolution sol = testutil::build_simulated_solution(inst, {day, day, day});
  const RobustConfig rc = RobustConfig::defaults_for(inst, 0.6, 3.0);
  const ObjectiveBreakdown b = evaluate_objective(inst, sol, &rc);
  CHECK(b.total == doctest::Approx(b.sum_of_terms()).epsilon(1e-9));
  CHECK(b.total > 0.0);
}

TEST_CASE("dimension mismatch is a structured error") {
  auto inst = testutil::toy_instance({.customers = 2});
  auto other = testutil::toy_instance({.customers = 3});
  const PlanSolution sol = PlanSolution::zeros(other);
  CHECK_THROWS_AS(evaluate_objective(inst, sol), DimensionError);
  try {
    evaluate_objective(inst, sol);
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("UnmD_adp") != std::string::npos);
  }
}

}  // TEST_SUITE
