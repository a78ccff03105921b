#pragma once

#include <string>
#include <vector>

#include "yplan/instance.hpp"

namespace yplan {

// Product indices of the embedded dairy case study.
enum CaseProduct {
  kCream = 0,
  kLowFat = 1,
  kTraditionalStrained = 2,
  kEggplant = 3,
  kStrawberry = 4,
  kCucumber = 5,
};

// The embedded real-world fixture: a single plant, 10 distribution centers,
// six yogurt products in two families on two identical lines, three
// contracted vehicles with a [500, 1500] load window, five demand days, and
// a one-day cooling/QC lag. Demand is the recorded per-DC matrix; cost and
// rate parameters not published with the case data are frozen seeded draws
// from the standard sampling scheme so regressions stay stable.
PlanningInstance case_study();

// One recorded vehicle route of the case data, with the total load the
// source tables print for it.
struct ReferenceRoute {
  int period = 0;  // demand day, 0-based
  int route = 0;   // vehicle, 0-based
  std::vector<int> stops;  // customer DC indices (1-based = Canbo number)
  double recorded_total = 0.0;
};

// All 15 recorded routes. Note: the recorded total for period 2 / route 1
// (1172) disagrees with the demand-matrix sum for its stops (1192); every
// other recorded total matches the demand sums exactly.
std::vector<ReferenceRoute> case_study_reference_routes();

std::string case_product_name(int p);

}  // namespace yplan
