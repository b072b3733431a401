#include "uniq01/json_io.hpp"

#include <stdexcept>

#include "uniq01/errors.hpp"

namespace uniq01 {

namespace {

const Json& require_field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Int int_from_field(const Json& j) {
  if (!j.is_string()) throw ParseError("integers must be decimal strings");
  return int_from_decimal(j.get_ref<const std::string&>());
}

std::vector<Int> int_array(const Json& j, const char* key) {
  const Json& field = require_field(j, key);
  if (!field.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<Int> out;
  out.reserve(field.size());
  for (const Json& entry : field) out.push_back(int_from_field(entry));
  return out;
}

Json decimal_array(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(to_decimal(v));
  return out;
}

template <class T>
T validated(T value) {
  try {
    validate(value);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return value;
}

}  // namespace

const char* kind_name(const AnyInstance& inst) {
  return std::visit(
      [](const auto& v) -> const char* {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KnapsackInstance>) return "knapsack";
        if constexpr (std::is_same_v<T, SubsetSumGoalInstance>) return "subset_sum_goal";
        if constexpr (std::is_same_v<T, Rank1QuadraticProgram>) return "rank1_quadratic";
        if constexpr (std::is_same_v<T, QuadraticProgram>) return "quadratic";
        if constexpr (std::is_same_v<T, HyperbolicProgram>) return "hyperbolic";
      },
      inst);
}

Objective objective_for(const AnyInstance& inst) {
  return std::visit(
      [](const auto& v) -> Objective {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KnapsackInstance>) return MaximizeKnapsackProfit{v};
        else if constexpr (std::is_same_v<T, SubsetSumGoalInstance>) return MinimizeSsg{v};
        else if constexpr (std::is_same_v<T, Rank1QuadraticProgram>)
          return MinimizeQuadratic{v};
        else if constexpr (std::is_same_v<T, QuadraticProgram>) return MinimizeQuadratic{v};
        else return MaximizeHyperbolic{v};
      },
      inst);
}

Json to_json(const KnapsackInstance& inst) {
  Json j;
  j["type"] = "knapsack";
  j["weights"] = decimal_array(inst.weights);
  j["profits"] = decimal_array(inst.profits);
  j["bound"] = to_decimal(inst.bound);
  return j;
}

Json to_json(const SubsetSumGoalInstance& inst) {
  Json j;
  j["type"] = "subset_sum_goal";
  j["weights"] = decimal_array(inst.weights);
  j["goal"] = to_decimal(inst.goal);
  return j;
}

Json to_json(const Rank1QuadraticProgram& prog) {
  Json j;
  j["type"] = "rank1_quadratic";
  j["u"] = decimal_array(prog.u.coeffs);
  j["v"] = decimal_array(prog.v.coeffs);
  return j;
}

Json to_json(const QuadraticProgram& prog) {
  Json j;
  j["type"] = "quadratic";
  Json rows = Json::array();
  for (const auto& row : prog.matrix) rows.push_back(decimal_array(row));
  j["matrix"] = std::move(rows);
  return j;
}

Json to_json(const HyperbolicProgram& prog) {
  Json j;
  j["type"] = "hyperbolic";
  j["a0"] = to_decimal(prog.numerator.constant);
  j["a"] = decimal_array(prog.numerator.coeffs);
  j["b0"] = to_decimal(prog.denominator.constant);
  j["b"] = decimal_array(prog.denominator.coeffs);
  return j;
}

Json to_json(const AnyInstance& inst) {
  return std::visit([](const auto& v) { return to_json(v); }, inst);
}

Json to_json(const Assignment& x) {
  Json j = Json::array();
  for (std::uint8_t b : x.bits) j.push_back(static_cast<int>(b));
  return j;
}

Json to_json(const OracleStats& stats) {
  Json j;
  j["threshold_queries"] = stats.threshold_queries;
  j["witness_queries"] = stats.witness_queries;
  j["assignments_examined"] = stats.assignments_examined;
  return j;
}

Json to_json(const UniquenessReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  if (report.optimal_value) {
    Json value;
    value["num"] = to_decimal(report.optimal_value->get_num());
    value["den"] = to_decimal(report.optimal_value->get_den());
    j["optimal_value"] = std::move(value);
  }
  Json witnesses = Json::array();
  for (const Assignment& w : report.witnesses) witnesses.push_back(to_json(w));
  j["witnesses"] = std::move(witnesses);
  j["stats"] = to_json(report.stats);
  j["method"] = report.method;
  if (!report.phase1.empty()) j["phase1"] = report.phase1;
  return j;
}

Json to_json(const SolutionMap& map) {
  Json j;
  j["direction"] = map.direction == MapDirection::forward ? "forward" : "backward";
  switch (map.rule) {
    case MapRule::identity_on_items:
      j["rule"] = "identity_on_items";
      break;
    case MapRule::add_auxiliary_variable_set_to_1:
      j["rule"] = "add_auxiliary_variable_set_to_1";
      break;
    case MapRule::drop_auxiliary_variable:
      j["rule"] = "drop_auxiliary_variable";
      break;
  }
  return j;
}

Json to_json(const BijectionReport& report) {
  Json j;
  j["left_count"] = to_decimal(report.left_count);
  j["right_count"] = to_decimal(report.right_count);
  j["matched"] = report.matched;
  if (report.counterexample_source || report.counterexample_target) {
    Json ce;
    ce["source"] =
        report.counterexample_source ? to_json(*report.counterexample_source) : Json(nullptr);
    ce["target"] =
        report.counterexample_target ? to_json(*report.counterexample_target) : Json(nullptr);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

AnyInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance document must be a JSON object");
  if (j.contains("instance")) return instance_from_json(j.at("instance"));

  const Json& type = require_field(j, "type");
  if (!type.is_string()) throw ParseError("field 'type' must be a string");
  const std::string& kind = type.get_ref<const std::string&>();

  if (kind == "knapsack") {
    KnapsackInstance inst;
    inst.weights = int_array(j, "weights");
    inst.profits = int_array(j, "profits");
    inst.bound = int_from_field(require_field(j, "bound"));
    return validated(std::move(inst));
  }
  if (kind == "subset_sum_goal") {
    SubsetSumGoalInstance inst;
    inst.weights = int_array(j, "weights");
    inst.goal = int_from_field(require_field(j, "goal"));
    return validated(std::move(inst));
  }
  if (kind == "rank1_quadratic") {
    Rank1QuadraticProgram prog;
    prog.u.constant = 0;
    prog.v.constant = 0;
    prog.u.coeffs = int_array(j, "u");
    prog.v.coeffs = int_array(j, "v");
    return validated(std::move(prog));
  }
  if (kind == "quadratic") {
    const Json& rows = require_field(j, "matrix");
    if (!rows.is_array()) throw ParseError("field 'matrix' must be an array of arrays");
    QuadraticProgram prog;
    for (const Json& row : rows) {
      if (!row.is_array()) throw ParseError("field 'matrix' must be an array of arrays");
      std::vector<Int> entries;
      entries.reserve(row.size());
      for (const Json& entry : row) entries.push_back(int_from_field(entry));
      prog.matrix.push_back(std::move(entries));
    }
    return validated(std::move(prog));
  }
  if (kind == "hyperbolic") {
    HyperbolicProgram prog;
    prog.numerator.constant = int_from_field(require_field(j, "a0"));
    prog.numerator.coeffs = int_array(j, "a");
    prog.denominator.constant = int_from_field(require_field(j, "b0"));
    prog.denominator.coeffs = int_array(j, "b");
    return validated(std::move(prog));
  }
  throw ParseError("unknown instance type '" + kind + "'");
}

AnyInstance parse_instance_text(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return instance_from_json(j);
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace uniq01
