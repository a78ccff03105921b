#include <doctest.h>

#include "yplan/errors.hpp"
#include "yplan/generator.hpp"
#include "yplan/instance_io.hpp"

using namespace yplan;

TEST_SUITE("generator") {

TEST_CASE("small instances stay inside their declared ranges") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    const PlanningInstance inst = generate(spec);
    CHECK(inst.num_dcs >= 3);
    CHECK(inst.num_dcs <= 5);
    CHECK(inst.num_families >= 1);
    CHECK(inst.num_families <= 2);
    CHECK(inst.num_lines >= 2);
    CHECK(inst.num_lines <= 3);
    CHECK(inst.num_vehicles >= 2);
    CHECK(inst.num_vehicles <= 3);
    CHECK(inst.num_products >= 2);
    CHECK(inst.num_products <= 4);
    CHECK(inst.num_demand_days >= 1);
    CHECK(inst.num_demand_days <= 3);
    for (int d = 0; d < inst.num_demand_days; ++d)
      for (int p = 0; p < inst.num_products; ++p)
        for (int a = 1; a < inst.num_dcs; ++a) {
          CHECK(inst.demand(d, p, a) >= 50.0);
          CHECK(inst.demand(d, p, a) <= 100.0);
        }
    for (double x : inst.truck_max_load) {
      CHECK(x >= 1000.0);
      CHECK(x <= 2000.0);
    }
    for (double x : inst.regular_time) {
      CHECK(x >= 420.0);
      CHECK(x <= 480.0);
    }
  }
}

TEST_CASE("identical seeds give byte-identical instances") {
  GenSpec spec;
  spec.size_class = SizeClass::kMedium;
  spec.seed = 777;
  const std::string a = instance_to_json(generate(spec));
  const std::string b = instance_to_json(generate(spec));
  CHECK(a == b);
}

TEST_CASE("different seeds differ") {
  GenSpec a, b;
  a.seed = 1;
  b.seed = 2;
  CHECK(instance_to_json(generate(a)) != instance_to_json(generate(b)));
}

TEST_CASE("freshness-rate draws fill the unit interval") {
  double sum = 0.0;
  int n = 0;
  double lo = 1.0, hi = 0.0;
  std::uint64_t seed = 0;
  while (n < 10000) {
    GenSpec spec;
    spec.seed = seed++;
    const PlanningInstance inst = generate(spec);
    for (double c : inst.freshness_rate) {
      sum += c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      ++n;
    }
  }
  CHECK(lo >= 0.0);
  CHECK(hi <= 1.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.04));  // mean within 0.5 +- 0.02
}

TEST_CASE("every generated instance passes validation invariants") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.size_class = seed % 2 == 0 ? SizeClass::kSmall : SizeClass::kMedium;
    CHECK_NOTHROW(generate(spec).validate());
  }
}

TEST_CASE("overrides replace sampling ranges") {
  GenSpec spec;
  spec.seed = 5;
  spec.overrides["a"] = {3, 3};
  spec.overrides["l"] = {2, 2};
  spec.overrides["MinTC_l"] = {0, 0};
  const PlanningInstance inst = generate(spec);
  CHECK(inst.num_dcs == 3);
  CHECK(inst.num_vehicles == 2);
  for (double x : inst.truck_min_load) CHECK(x == 0.0);
}

TEST_CASE("contradictory overrides are rejected") {
  GenSpec spec;
  spec.overrides["Demand_dpa"] = {90, 50};
  CHECK_THROWS_AS(generate(spec), ValidationError);
}

}  // TEST_SUITE
