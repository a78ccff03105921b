#include "yplan/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "yplan/errors.hpp"

namespace yplan {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const NdArray<double>& arr, int level = 0) {
  Json out = Json::array();
  if (arr.rank() == 0) return out;
  if (arr.rank() == 1) {
    for (double x : arr.flat()) out.push_back(x);
    return out;
  }
  // Recurse by slicing the flat buffer.
  const int head = arr.dim(0);
  std::size_t stride = 1;
  std::vector<int> rest(arr.dims().begin() + 1, arr.dims().end());
  for (int d : rest) stride *= static_cast<std::size_t>(d);
  for (int k = 0; k < head; ++k) {
    NdArray<double> sub(rest);
    std::copy(arr.flat().begin() + static_cast<std::ptrdiff_t>(stride) * k,
              arr.flat().begin() + static_cast<std::ptrdiff_t>(stride) * (k + 1),
              sub.flat().begin());
    out.push_back(to_json(sub, level + 1));
  }
  return out;
}

void flatten_into(const Json& j, const std::vector<int>& dims, std::size_t depth,
                  std::vector<double>& out, const std::string& key) {
  if (depth == dims.size()) {
    if (!j.is_number())
      throw ParseError("field " + key + ": expected a number at depth " + std::to_string(depth));
    out.push_back(j.get<double>());
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dims[depth]) {
    std::ostringstream os;
    os << "field " << key << ": expected array of length " << dims[depth] << " at depth "
       << depth;
    throw ParseError(os.str());
  }
  for (const auto& sub : j) flatten_into(sub, dims, depth + 1, out, key);
}

NdArray<double> array_from_json(const Json& j, std::vector<int> dims, const std::string& key) {
  std::vector<double> flat;
  flat.reserve(1);
  flatten_into(j, dims, 0, flat, key);
  NdArray<double> arr(dims);
  arr.flat() = std::move(flat);
  return arr;
}

std::vector<double> vector_from_json(const Json& j, int n, const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("field " + key + ": expected array of length " + std::to_string(n));
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError("field " + key + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::vector<int>> int_lists_from_json(const Json& j, int n, const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("field " + key + ": expected array of length " + std::to_string(n));
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto& row = j[static_cast<std::size_t>(k)];
    if (!row.is_array()) throw ParseError("field " + key + ": expected nested arrays");
    for (const auto& x : row) out[static_cast<std::size_t>(k)].push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + "\" in " + where);
  return *it;
}

int int_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw ParseError(std::string("field ") + key + ": expected integer");
  return v.get<int>();
}

}  // namespace

std::string instance_to_json(const PlanningInstance& inst, const RobustConfig* robust) {
  Json j;
  j["schema_version"] = 1;
  j["sets"] = {{"A", inst.num_dcs},        {"F", inst.num_families},
               {"J", inst.num_lines},      {"L", inst.num_vehicles},
               {"P", inst.num_products},   {"D", inst.num_demand_days},
               {"R", inst.num_recipes},    {"I", inst.num_production_days}};
  j["cooling_lag_days"] = inst.cooling_lag_days;

  Json sub;
  sub["family_of_product"] = inst.family_of_product;
  sub["J_f"] = inst.lines_for_family;
  sub["J_p"] = inst.lines_for_product;
  sub["F_j"] = inst.families_on_line;
  sub["R_f"] = inst.recipes_for_family;
  sub["R_j"] = inst.recipes_on_line;
  sub["F_r"] = inst.families_of_recipe;
  j["subsets"] = std::move(sub);

  Json par;
  par["Pret_r"] = inst.recipe_prep_time;
  par["Rtime_i"] = inst.regular_time;
  par["Maxtime_i"] = inst.max_time;
  par["ShelfLife_p"] = inst.shelf_life;
  par["CrRate_p"] = inst.freshness_rate;
  par["FCT_l"] = inst.truck_fixed_cost;
  par["VarCost_p"] = inst.variable_cost;
  par["OvertCost_i"] = inst.overtime_cost;
  par["MaxTC_l"] = inst.truck_max_load;
  par["MinTC_l"] = inst.truck_min_load;
  par["Pcapacity_i"] = inst.plant_capacity;
  par["Pallet_p"] = inst.pallet_factor;
  par["dailyop_ji"] = to_json(inst.daily_opening);
  par["dailysh_ji"] = to_json(inst.daily_shutdown);
  par["W_ji"] = to_json(inst.shift_length);
  par["Cht_fej"] = to_json(inst.changeover_time);
  par["Chc_feji"] = to_json(inst.changeover_cost);
  par["Setup_jp"] = to_json(inst.setup_time);
  par["Relt_ri"] = to_json(inst.recipe_release);
  par["O_ji"] = to_json(inst.unit_prep_time);
  par["Bpc_ri"] = to_json(inst.recipe_batch_cost);
  par["IC_pi"] = to_json(inst.inventory_cost);
  par["VTC_abl"] = to_json(inst.transport_cost);
  par["LineCost_ji"] = to_json(inst.line_cost);
  par["FCost_ji"] = to_json(inst.line_fixed_cost);
  par["MaxLots_p"] = inst.max_lot;
  par["MinLots_p"] = inst.min_lot;
  par["Demand_dpa"] = to_json(inst.demand);
  par["Prate_jp"] = to_json(inst.production_rate);
  par["UnmdCost_ap"] = to_json(inst.unmet_cost);
  par["MuMax_ri"] = to_json(inst.recipe_max);
  par["MuMin_ri"] = to_json(inst.recipe_min);
  par["CST"] = inst.cooling_time_min;
  par["QCTime"] = inst.qc_time_min;
  par["StCapacity"] = inst.storage_capacity;
  par["M"] = inst.big_m;
  j["parameters"] = std::move(par);

  if (robust != nullptr) {
    Json rj;
    rj["t_m"] = to_json(robust->modal_violation);
    rj["phi"] = to_json(robust->spread_right);
    rj["phi_prime"] = to_json(robust->spread_left);
    rj["alpha"] = robust->alpha;
    rj["gamma"] = robust->gamma;
    j["robust"] = std::move(rj);
  } else {
    j["robust"] = nullptr;
  }
  return j.dump(2) + "\n";
}

InstanceDocument instance_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (int_field(j, "schema_version", "document") != 1)
    throw ParseError("unsupported schema_version (expected 1)");

  InstanceDocument doc;
  PlanningInstance& inst = doc.instance;
  const Json& sets = field(j, "sets", "document");
  inst.num_dcs = int_field(sets, "A", "sets");
  inst.num_families = int_field(sets, "F", "sets");
  inst.num_lines = int_field(sets, "J", "sets");
  inst.num_vehicles = int_field(sets, "L", "sets");
  inst.num_products = int_field(sets, "P", "sets");
  inst.num_demand_days = int_field(sets, "D", "sets");
  inst.num_recipes = int_field(sets, "R", "sets");
  inst.num_production_days = int_field(sets, "I", "sets");
  inst.cooling_lag_days = int_field(j, "cooling_lag_days", "document");

  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;

  const Json& sub = field(j, "subsets", "document");
  {
    const Json& fop = field(sub, "family_of_product", "subsets");
    if (!fop.is_array() || static_cast<int>(fop.size()) != P)
      throw ParseError("field family_of_product: expected array of length " + std::to_string(P));
    for (const auto& x : fop) inst.family_of_product.push_back(x.get<int>());
  }
  inst.lines_for_family = int_lists_from_json(field(sub, "J_f", "subsets"), F, "J_f");
  inst.lines_for_product = int_lists_from_json(field(sub, "J_p", "subsets"), P, "J_p");
  inst.families_on_line = int_lists_from_json(field(sub, "F_j", "subsets"), J, "F_j");
  inst.recipes_for_family = int_lists_from_json(field(sub, "R_f", "subsets"), F, "R_f");
  inst.recipes_on_line = int_lists_from_json(field(sub, "R_j", "subsets"), J, "R_j");
  inst.families_of_recipe = int_lists_from_json(field(sub, "F_r", "subsets"), R, "F_r");

  const Json& par = field(j, "parameters", "document");
  inst.recipe_prep_time = vector_from_json(field(par, "Pret_r", "parameters"), R, "Pret_r");
  inst.regular_time = vector_from_json(field(par, "Rtime_i", "parameters"), I, "Rtime_i");
  inst.max_time = vector_from_json(field(par, "Maxtime_i", "parameters"), I, "Maxtime_i");
  inst.shelf_life = vector_from_json(field(par, "ShelfLife_p", "parameters"), P, "ShelfLife_p");
  inst.freshness_rate = vector_from_json(field(par, "CrRate_p", "parameters"), P, "CrRate_p");
  inst.truck_fixed_cost = vector_from_json(field(par, "FCT_l", "parameters"), L, "FCT_l");
  inst.variable_cost = vector_from_json(field(par, "VarCost_p", "parameters"), P, "VarCost_p");
  inst.overtime_cost = vector_from_json(field(par, "OvertCost_i", "parameters"), I, "OvertCost_i");
  inst.truck_max_load = vector_from_json(field(par, "MaxTC_l", "parameters"), L, "MaxTC_l");
  inst.truck_min_load = vector_from_json(field(par, "MinTC_l", "parameters"), L, "MinTC_l");
  inst.plant_capacity = vector_from_json(field(par, "Pcapacity_i", "parameters"), I, "Pcapacity_i");
  inst.pallet_factor = vector_from_json(field(par, "Pallet_p", "parameters"), P, "Pallet_p");
  inst.daily_opening = array_from_json(field(par, "dailyop_ji", "parameters"), {J, I}, "dailyop_ji");
  inst.daily_shutdown = array_from_json(field(par, "dailysh_ji", "parameters"), {J, I}, "dailysh_ji");
  inst.shift_length = array_from_json(field(par, "W_ji", "parameters"), {J, I}, "W_ji");
  inst.changeover_time = array_from_json(field(par, "Cht_fej", "parameters"), {F, F, J}, "Cht_fej");
  inst.changeover_cost =
      array_from_json(field(par, "Chc_feji", "parameters"), {F, F, J, I}, "Chc_feji");
  inst.setup_time = array_from_json(field(par, "Setup_jp", "parameters"), {J, P}, "Setup_jp");
  inst.recipe_release = array_from_json(field(par, "Relt_ri", "parameters"), {R, I}, "Relt_ri");
  inst.unit_prep_time = array_from_json(field(par, "O_ji", "parameters"), {J, I}, "O_ji");
  inst.recipe_batch_cost = array_from_json(field(par, "Bpc_ri", "parameters"), {R, I}, "Bpc_ri");
  inst.inventory_cost = array_from_json(field(par, "IC_pi", "parameters"), {P, I}, "IC_pi");
  inst.transport_cost = array_from_json(field(par, "VTC_abl", "parameters"), {A, A, L}, "VTC_abl");
  inst.line_cost = array_from_json(field(par, "LineCost_ji", "parameters"), {J, I}, "LineCost_ji");
  inst.line_fixed_cost = array_from_json(field(par, "FCost_ji", "parameters"), {J, I}, "FCost_ji");
  inst.max_lot = vector_from_json(field(par, "MaxLots_p", "parameters"), P, "MaxLots_p");
  inst.min_lot = vector_from_json(field(par, "MinLots_p", "parameters"), P, "MinLots_p");
  inst.demand = array_from_json(field(par, "Demand_dpa", "parameters"), {D, P, A}, "Demand_dpa");
  inst.production_rate = array_from_json(field(par, "Prate_jp", "parameters"), {J, P}, "Prate_jp");
  inst.unmet_cost = array_from_json(field(par, "UnmdCost_ap", "parameters"), {A, P}, "UnmdCost_ap");
  inst.recipe_max = array_from_json(field(par, "MuMax_ri", "parameters"), {R, I}, "MuMax_ri");
  inst.recipe_min = array_from_json(field(par, "MuMin_ri", "parameters"), {R, I}, "MuMin_ri");
  inst.cooling_time_min = field(par, "CST", "parameters").get<double>();
  inst.qc_time_min = field(par, "QCTime", "parameters").get<double>();
  inst.storage_capacity = field(par, "StCapacity", "parameters").get<double>();
  inst.big_m = field(par, "M", "parameters").get<double>();

  const Json& rj = field(j, "robust", "document");
  if (!rj.is_null()) {
    RobustConfig rc;
    rc.modal_violation = array_from_json(field(rj, "t_m", "robust"), {D, P, A}, "t_m");
    rc.spread_right = array_from_json(field(rj, "phi", "robust"), {D, P, A}, "phi");
    rc.spread_left = array_from_json(field(rj, "phi_prime", "robust"), {D, P, A}, "phi_prime");
    rc.alpha = field(rj, "alpha", "robust").get<double>();
    rc.gamma = field(rj, "gamma", "robust").get<double>();
    doc.robust = std::move(rc);
  }

  inst.validate();
  if (doc.robust) doc.robust->validate(inst);
  return doc;
}

void write_instance(const PlanningInstance& inst, const std::string& path,
                    const RobustConfig* robust) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << instance_to_json(inst, robust);
}

InstanceDocument read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

namespace {

template <typename T>
Json binary_to_json(const NdArray<T>& arr) {
  NdArray<double> tmp(arr.dims());
  for (std::size_t k = 0; k < arr.flat().size(); ++k)
    tmp.flat()[k] = static_cast<double>(arr.flat()[k]);
  return to_json(tmp);
}

NdArray<std::uint8_t> binary_from_json(const Json& j, std::vector<int> dims,
                                       const std::string& key) {
  const NdArray<double> tmp = array_from_json(j, dims, key);
  NdArray<std::uint8_t> out(dims);
  for (std::size_t k = 0; k < tmp.flat().size(); ++k) {
    const double v = tmp.flat()[k];
    if (v != 0.0 && v != 1.0) throw ParseError("field " + key + ": binaries must be 0 or 1");
    out.flat()[k] = static_cast<std::uint8_t>(v);
  }
  return out;
}

}  // namespace

std::string solution_to_json(const PlanSolution& sol) {
  Json j;
  j["schema_version"] = 1;
  j["Q_pji"] = to_json(sol.production);
  j["QB_pi"] = to_json(sol.total_production);
  j["II_pi"] = to_json(sol.inventory);
  j["UnmD_adp"] = to_json(sol.unmet);
  j["UD_apld"] = to_json(sol.delivered);
  j["UV_abpld"] = to_json(sol.arc_product_flow);
  j["UB_abld"] = to_json(sol.arc_flow);
  j["PT_fji"] = to_json(sol.processing_time);
  j["CT_fji"] = to_json(sol.completion_time);
  j["CmaxFamily_fi"] = to_json(sol.family_makespan);
  j["CmaxLine_ji"] = to_json(sol.line_makespan);
  j["OverTime_i"] = sol.overtime;
  j["V_ji"] = binary_to_json(sol.line_used);
  j["G_ri"] = binary_to_json(sol.recipe_used);
  j["X_feji"] = binary_to_json(sol.sequence);
  j["Y_fji"] = binary_to_json(sol.family_assigned);
  j["YB_pji"] = binary_to_json(sol.product_assigned);
  j["ZV_abld"] = binary_to_json(sol.arc_used);
  j["o_da"] = to_json(sol.visit_order);
  j["Z"] = sol.objective;
  return j.dump(2) + "\n";
}

PlanSolution solution_from_json(const std::string& text, const PlanningInstance& inst) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const int A = inst.num_dcs, F = inst.num_families, J = inst.num_lines;
  const int L = inst.num_vehicles, P = inst.num_products, D = inst.num_demand_days;
  const int R = inst.num_recipes, I = inst.num_production_days;
  PlanSolution s = PlanSolution::zeros(inst);
  s.production = array_from_json(field(j, "Q_pji", "solution"), {P, J, I}, "Q_pji");
  s.total_production = array_from_json(field(j, "QB_pi", "solution"), {P, I}, "QB_pi");
  s.inventory = array_from_json(field(j, "II_pi", "solution"), {P, I}, "II_pi");
  s.unmet = array_from_json(field(j, "UnmD_adp", "solution"), {A, D, P}, "UnmD_adp");
  s.delivered = array_from_json(field(j, "UD_apld", "solution"), {A, P, L, D}, "UD_apld");
  s.arc_product_flow =
      array_from_json(field(j, "UV_abpld", "solution"), {A, A, P, L, D}, "UV_abpld");
  s.arc_flow = array_from_json(field(j, "UB_abld", "solution"), {A, A, L, D}, "UB_abld");
  s.processing_time = array_from_json(field(j, "PT_fji", "solution"), {F, J, I}, "PT_fji");
  s.completion_time = array_from_json(field(j, "CT_fji", "solution"), {F, J, I}, "CT_fji");
  s.family_makespan =
      array_from_json(field(j, "CmaxFamily_fi", "solution"), {F, I}, "CmaxFamily_fi");
  s.line_makespan = array_from_json(field(j, "CmaxLine_ji", "solution"), {J, I}, "CmaxLine_ji");
  s.overtime = vector_from_json(field(j, "OverTime_i", "solution"), I, "OverTime_i");
  s.line_used = binary_from_json(field(j, "V_ji", "solution"), {J, I}, "V_ji");
  s.recipe_used = binary_from_json(field(j, "G_ri", "solution"), {R, I}, "G_ri");
  s.sequence = binary_from_json(field(j, "X_feji", "solution"), {F, F, J, I}, "X_feji");
  s.family_assigned = binary_from_json(field(j, "Y_fji", "solution"), {F, J, I}, "Y_fji");
  s.product_assigned = binary_from_json(field(j, "YB_pji", "solution"), {P, J, I}, "YB_pji");
  s.arc_used = binary_from_json(field(j, "ZV_abld", "solution"), {A, A, L, D}, "ZV_abld");
  s.visit_order = array_from_json(field(j, "o_da", "solution"), {D, A}, "o_da");
  s.objective = field(j, "Z", "solution").get<double>();
  return s;
}

void write_solution(const PlanSolution& sol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << solution_to_json(sol);
}

PlanSolution read_solution(const std::string& path, const PlanningInstance& inst) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str(), inst);
}

}  // namespace yplan
