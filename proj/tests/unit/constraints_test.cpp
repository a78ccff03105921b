#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "yplan/constraints.hpp"

using namespace yplan;

TEST_SUITE("constraints") {

TEST_CASE("all-zero solution violates only demand coverage") {
  auto inst = testutil::toy_instance({.customers = 2, .products = 2, .days = 2});
  inst.demand(0, 0, 1) = 70.0;
  inst.demand(1, 1, 2) = 55.0;
  const PlanSolution sol = PlanSolution::zeros(inst);
  const auto reports = check_constraints(inst, sol);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) CHECK(r.constraint_id == "C41");
  CHECK(reports[0].index_tuple == std::vector<int>{1, 0, 0});
  CHECK(reports[0].violation == doctest::Approx(70.0));
  CHECK(reports[1].index_tuple == std::vector<int>{2, 1, 1});
  CHECK(reports[1].violation == doctest::Approx(55.0));
}

TEST_CASE("zero-demand instance accepts the empty solution") {
  auto inst = testutil::toy_instance({.customers = 3, .products = 2, .days = 2});
  const PlanSolution sol = PlanSolution::zeros(inst);
  CHECK(check_constraints(inst, sol).empty());
}

TEST_CASE("paper-strict mode forces daily tours even at zero demand") {
  auto inst = testutil::toy_instance({.customers = 2, .days = 1});
  const PlanSolution sol = PlanSolution::zeros(inst);
  CheckOptions opts;
  opts.paper_strict = true;
  const auto reports = check_constraints(inst, sol, nullptr, opts);
  std::set<std::string> ids;
  for (const auto& r : reports) ids.insert(r.constraint_id);
  CHECK(ids.count("C23") == 1);
  CHECK(ids.count("C25") == 1);
  CHECK(ids.count("C26") == 1);
}

TEST_CASE("disconnected cycle trips subtour elimination") {
  auto inst = testutil::toy_instance({.customers = 5, .days = 1});
  PlanSolution sol = PlanSolution::zeros(inst);
  // Proper tour depot -> 1 -> 2 -> 3 -> depot with consistent positions.
  sol.arc_used(0, 1, 0, 0) = 1;
  sol.arc_used(1, 2, 0, 0) = 1;
  sol.arc_used(2, 3, 0, 0) = 1;
  sol.arc_used(3, 0, 0, 0) = 1;
  sol.visit_order(0, 1) = 1;
  sol.visit_order(0, 2) = 2;
  sol.visit_order(0, 3) = 3;
  // Disconnected 4 <-> 5 cycle.
  sol.arc_used(4, 5, 0, 0) = 1;
  sol.arc_used(5, 4, 0, 0) = 1;
  sol.visit_order(0, 4) = 4;
  sol.visit_order(0, 5) = 5;

  const auto reports = check_constraints(inst, sol);
  REQUIRE(!reports.empty());
  bool cycle_flagged = false;
  for (const auto& r : reports) {
    CHECK(r.constraint_id == "C31");
    const int a = r.index_tuple[0], b = r.index_tuple[1];
    CHECK(((a == 4 && b == 5) || (a == 5 && b == 4)));
    cycle_flagged = true;
  }
  CHECK(cycle_flagged);

  // Independent check: no position assignment can satisfy both cycle arcs.
  const double m = static_cast<double>(inst.num_dcs);
  bool satisfiable = false;
  for (int o4 = 0; o4 < inst.num_dcs; ++o4)
    for (int o5 = 0; o5 < inst.num_dcs; ++o5)
      if (o4 - o5 + m <= m - 1.0 && o5 - o4 + m <= m - 1.0) satisfiable = true;
  CHECK(!satisfiable);
}

TEST_CASE("simulated produce-cool-ship plans are feasible") {
  testutil::ToyDims dims;
  dims.customers = 3;
  dims.products = 2;
  dims.lines = 2;
  dims.vehicles = 2;
  dims.days = 3;
  dims.families = 2;
  auto inst = testutil::toy_instance(dims);
  inst.setup_time = NdArray<double>({2, 2}, 12.0);
  inst.changeover_time = NdArray<double>({2, 2, 2}, 9.0);
  inst.recipe_prep_time.assign(inst.num_recipes, 4.0);
  for (int d = 0; d < 3; ++d)
    for (int p = 0; p < 2; ++p)
      for (int a = 1; a < 4; ++a) inst.demand(d, p, a) = 40.0;

  // Produce on day 0 and 1; ship with the one-day cooling lag on days 1, 2.
  testutil::SimDay d0;
  d0.quantities = {{130.0, 0.0}, {0.0, 125.0}};
  testutil::SimDay d1 = d0;
  testutil::SimDay d2;
  for (auto* day : {&d1, &d2}) {
    day->routes = {{1, 2}, {3}};
    day->deliveries[1] = {40.0, 40.0};
    day->deliveries[2] = {40.0, 40.0};
    day->deliveries[3] = {40.0, 40.0};
  }
  d1.quantities = d0.quantities;
  const PlanSolution sol = testutil::build_simulated_solution(inst, {d0, d1, d2});
  const auto reports = check_constraints(inst, sol);
  CHECK(reports.empty());
}

TEST_CASE("shipping beyond the cooled stock violates the freshness row") {
  auto inst = testutil::toy_instance({.customers = 1, .days = 2});
  inst.demand(1, 0, 1) = 50.0;
  testutil::SimDay d0;
  d0.quantities = {{30.0}};
  testutil::SimDay d1;
  d1.quantities = {{60.0}};
  d1.routes = {{1}};
  d1.deliveries[1] = {50.0};  // only 30 finished cooling
  const PlanSolution sol = testutil::build_simulated_solution(inst, {d0, d1});
  const auto reports = check_constraints(inst, sol);
  bool c42 = false;
  for (const auto& r : reports)
    if (r.constraint_id == "C42") {
      c42 = true;
      CHECK(r.lhs == doctest::Approx(50.0));
      CHECK(r.rhs == doctest::Approx(30.0));
    }
  CHECK(c42);
}

TEST_CASE("a closed freshness gate forbids lagged shipments entirely") {
  auto inst = testutil::toy_instance({.customers = 1, .days = 2});
  inst.freshness_rate[0] = 0.99;  // (1 - 0.99) * 30 = 0.3 < lag of 1 day
  inst.demand(1, 0, 1) = 20.0;
  testutil::SimDay d0;
  d0.quantities = {{25.0}};
  testutil::SimDay d1;
  d1.routes = {{1}};
  d1.deliveries[1] = {20.0};
  const PlanSolution sol = testutil::build_simulated_solution(inst, {d0, d1});
  const auto reports = check_constraints(inst, sol);
  bool c42 = false;
  for (const auto& r : reports)
    if (r.constraint_id == "C42") {
      c42 = true;
      CHECK(r.rhs == 0.0);
    }
  CHECK(c42);
}

TEST_CASE("robust mode at alpha = 1 matches deterministic verdicts") {
  auto inst = testutil::toy_instance({.customers = 2, .products = 2, .days = 2});
  inst.demand(0, 0, 1) = 70.0;
  inst.demand(1, 1, 2) = 45.0;
  const PlanSolution sol = PlanSolution::zeros(inst);
  const RobustConfig rc = RobustConfig::defaults_for(inst, 1.0, 10.0);
  const auto det = check_constraints(inst, sol);
  const auto rob = check_constraints(inst, sol, &rc);
  REQUIRE(det.size() == rob.size());
  for (std::size_t k = 0; k < det.size(); ++k) {
    CHECK(det[k].constraint_id == rob[k].constraint_id);
    CHECK(det[k].violation == doctest::Approx(rob[k].violation));
  }
}

TEST_CASE("softening shrinks the demand-coverage violation") {
  auto inst = testutil::toy_instance({.customers = 1});
  inst.demand(0, 0, 1) = 100.0;
  const PlanSolution sol = PlanSolution::zeros(inst);
  RobustConfig rc = RobustConfig::defaults_for(inst, 0.5, 1.0);
  // slack = (100 + (10 - 5)/3) * 0.5
  const double slack = (100.0 + 5.0 / 3.0) * 0.5;
  const auto reports = check_constraints(inst, sol, &rc);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].constraint_id == "C41");
  CHECK(reports[0].violation == doctest::Approx(100.0 - slack));
}

TEST_CASE("parallel checker matches the serial reference") {
  testutil::ToyDims dims;
  dims.customers = 4;
  dims.products = 3;
  dims.lines = 2;
  dims.vehicles = 2;
  dims.days = 3;
  dims.families = 2;
  auto inst = testutil::toy_instance(dims);
  for (int d = 0; d < 3; ++d)
    for (int p = 0; p < 3; ++p)
      for (int a = 1; a < 5; ++a) inst.demand(d, p, a) = 30.0 + 7.0 * p + a;
  PlanSolution sol = PlanSolution::zeros(inst);
  sol.production(0, 0, 0) = 50.0;  // deliberately inconsistent record
  sol.arc_used(1, 2, 0, 0) = 1;
  const auto serial = check_constraints(inst, sol);
  const auto parallel = check_constraints_parallel(inst, sol);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].constraint_id == parallel[k].constraint_id);
    CHECK(serial[k].index_tuple == parallel[k].index_tuple);
    CHECK(serial[k].lhs == parallel[k].lhs);
    CHECK(serial[k].rhs == parallel[k].rhs);
  }
}

}  // TEST_SUITE
