// uniq01 -- exact uniqueness decisions for 0-1 quadratic and hyperbolic
// programs, plus the reduction chain between knapsack, subset-sum-with-goal,
// rank-1 quadratic, and hyperbolic instances.
//
// Exit codes: 0 unique / solved / all checks matched, 1 multiple optima or a
// failed bijection check, 2 infeasible, 11 unreadable or malformed input,
// 12 instance beyond the brute-force limit, 13 other errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uniq01/decider.hpp"
#include "uniq01/errors.hpp"
#include "uniq01/generate.hpp"
#include "uniq01/json_io.hpp"
#include "uniq01/reductions.hpp"

namespace {

using namespace uniq01;

constexpr int kExitUnique = 0;
constexpr int kExitMultiple = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 11;
constexpr int kExitTooLarge = 12;
constexpr int kExitError = 13;

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write output file '" + out_path + "'");
  out << text;
}

int status_exit_code(Status status) {
  switch (status) {
    case Status::unique:
      return kExitUnique;
    case Status::multiple:
      return kExitMultiple;
    case Status::infeasible:
      return kExitInfeasible;
  }
  return kExitError;
}

struct ReduceStep {
  AnyInstance instance;
  SolutionMap map;
  std::vector<std::string> notices;
  bool source_changed = false;
  AnyInstance prepared_source;
};

KnapsackInstance prepare_knapsack(const KnapsackInstance& inst, std::size_t limit,
                                  std::vector<std::string>& notices) {
  KnapsackInstance normalized = normalize_profit(inst);
  if (normalized.size() != inst.size()) notices.push_back("profit normalized");
  KnapsackInstance padded = pad_feasible(normalized, limit);
  if (padded.size() != normalized.size()) notices.push_back("padded to feasibility");
  return padded;
}

ReduceStep run_reduction(const AnyInstance& input, const std::string& to, std::size_t limit) {
  ReduceStep step;
  if (const auto* knapsack = std::get_if<KnapsackInstance>(&input)) {
    KnapsackInstance prepared = prepare_knapsack(*knapsack, limit, step.notices);
    step.source_changed = !step.notices.empty();
    step.prepared_source = prepared;
    if (to == "ssg" || to == "subset_sum_goal") {
      step.instance = knapsack_to_ssg(prepared);
      step.map = SolutionMap{MapDirection::forward, MapRule::identity_on_items};
    } else if (to == "rank1" || to == "rank1_quadratic") {
      step.instance = ssg_to_rank1(knapsack_to_ssg(prepared));
      step.map = SolutionMap{MapDirection::forward, MapRule::add_auxiliary_variable_set_to_1};
    } else if (to == "hyperbolic") {
      step.instance = knapsack_to_hyperbolic(prepared, limit);
      step.map = SolutionMap{MapDirection::forward, MapRule::identity_on_items};
    } else {
      throw Error("no reduction from knapsack to '" + to + "'");
    }
    return step;
  }
  if (const auto* ssg = std::get_if<SubsetSumGoalInstance>(&input)) {
    if (to == "rank1" || to == "rank1_quadratic") {
      step.instance = ssg_to_rank1(*ssg);
      step.map = SolutionMap{MapDirection::forward, MapRule::add_auxiliary_variable_set_to_1};
      step.prepared_source = *ssg;
      return step;
    }
    throw Error("no reduction from subset_sum_goal to '" + to + "'");
  }
  throw Error("reductions start from knapsack or subset_sum_goal instances");
}

int cmd_gen(const std::string& kind_name, std::size_t n, const std::string& bound_text,
            std::uint64_t seed, const std::string& out_path) {
  auto kind = kind_from_name(kind_name);
  if (!kind) throw Error("unknown instance kind '" + kind_name + "'");
  Int bound = int_from_decimal(bound_text);
  if (sgn(bound) < 0) throw Error("--coeff-bound must be non-negative");
  AnyInstance inst = generate_instance(*kind, n, bound, seed);
  write_output(out_path, to_text(to_json(inst)));
  return 0;
}

int cmd_solve(const std::string& in_path, const std::string& engine, std::size_t max_n,
              const std::string& out_path) {
  AnyInstance inst = parse_instance_text(read_input(in_path));
  Objective obj = objective_for(inst);

  Json j;
  int code = kExitUnique;
  if (engine == "brute") {
    UniquenessReport report = brute_force_unique(obj, max_n);
    if (report.status == Status::infeasible) {
      j["status"] = "infeasible";
      code = kExitInfeasible;
    } else {
      j["status"] = "solved";
      Json value;
      value["num"] = to_decimal(report.optimal_value->get_num());
      value["den"] = to_decimal(report.optimal_value->get_den());
      j["optimal_value"] = std::move(value);
      j["witness"] = to_json(report.witnesses.front());
    }
    j["stats"] = to_json(OracleStats{});
    j["method"] = "brute";
  } else {
    EnumerationOracle oracle(max_n);
    std::optional<RationalSearchOutcome> out = solve_optimum(obj, oracle);
    if (!out) {
      j["status"] = "infeasible";
      code = kExitInfeasible;
      j["stats"] = to_json(oracle.stats());
    } else {
      j["status"] = "solved";
      Json value;
      value["num"] = to_decimal(out->optimum.get_num());
      value["den"] = to_decimal(out->optimum.get_den());
      j["optimal_value"] = std::move(value);
      j["witness"] = to_json(out->witness);
      j["stats"] = to_json(out->stats);
    }
    j["method"] = "oracle";
  }
  write_output(out_path, to_text(j));
  return code;
}

int cmd_decide(const std::string& in_path, const std::string& engine, std::size_t max_n,
               const std::string& out_path) {
  AnyInstance inst = parse_instance_text(read_input(in_path));
  Objective obj = objective_for(inst);

  UniquenessReport report;
  if (engine == "brute") {
    report = brute_force_unique(obj, max_n);
  } else {
    EnumerationOracle oracle(max_n);
    report = decide_unique(obj, oracle);
  }
  write_output(out_path, to_text(to_json(report)));
  return status_exit_code(report.status);
}

int cmd_reduce(const std::string& in_path, const std::string& from, const std::string& to,
               std::size_t max_n, const std::string& out_path) {
  AnyInstance input = parse_instance_text(read_input(in_path));
  if (!from.empty()) {
    auto expected = kind_from_name(from);
    if (!expected) throw Error("unknown --from kind '" + from + "'");
    if (std::string(kind_name(input)) != to_string(*expected))
      throw Error(std::string("--from says '") + from + "' but the input is '" +
                  kind_name(input) + "'");
  }
  ReduceStep step = run_reduction(input, to, max_n);

  Json j;
  j["instance"] = to_json(step.instance);
  j["solution_map"] = to_json(step.map);
  Json notices = Json::array();
  for (const std::string& n : step.notices) notices.push_back(n);
  j["notices"] = std::move(notices);
  if (step.source_changed) j["prepared_source"] = to_json(step.prepared_source);
  write_output(out_path, to_text(j));
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& to, std::size_t limit,
               const std::string& out_path) {
  AnyInstance input = parse_instance_text(read_input(in_path));

  std::vector<std::string> targets;
  if (to == "all") {
    if (std::holds_alternative<KnapsackInstance>(input))
      targets = {"ssg", "rank1", "hyperbolic"};
    else
      targets = {"rank1"};
  } else {
    targets = {to};
  }

  Json checks = Json::array();
  bool all_matched = true;
  std::vector<std::string> notices;
  Objective source_obj;
  if (const auto* knapsack = std::get_if<KnapsackInstance>(&input)) {
    KnapsackInstance prepared = prepare_knapsack(*knapsack, limit, notices);
    source_obj = MaximizeKnapsackProfit{prepared};
  } else if (const auto* ssg = std::get_if<SubsetSumGoalInstance>(&input)) {
    source_obj = MinimizeSsg{*ssg};
  } else {
    throw Error("verify starts from knapsack or subset_sum_goal instances");
  }

  for (const std::string& target : targets) {
    AnyInstance source_inst =
        std::holds_alternative<MaximizeKnapsackProfit>(source_obj)
            ? AnyInstance(std::get<MaximizeKnapsackProfit>(source_obj).instance)
            : AnyInstance(std::get<MinimizeSsg>(source_obj).instance);
    ReduceStep step = run_reduction(source_inst, target, limit);
    BijectionReport report =
        verify_bijection(source_obj, objective_for(step.instance), step.map, limit);
    all_matched = all_matched && report.matched;
    Json entry;
    entry["target"] = target;
    entry["solution_map"] = to_json(step.map);
    entry["report"] = to_json(report);
    checks.push_back(std::move(entry));
  }

  Json j;
  j["source"] = kind_name(input);
  Json notice_array = Json::array();
  for (const std::string& n : notices) notice_array.push_back(n);
  j["notices"] = std::move(notice_array);
  j["checks"] = std::move(checks);
  j["all_matched"] = all_matched;
  write_output(out_path, to_text(j));
  return all_matched ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact uniqueness decisions for 0-1 quadratic and hyperbolic programs"};
  app.require_subcommand(1);

  std::string in_path, out_path, engine = "oracle", from, kind, bound_text = "50";
  std::string to = "all";  // reduce marks --to required; verify defaults to every chain
  std::size_t n = 0;
  std::size_t max_n = EnumerationOracle::kDefaultLimit;
  std::size_t limit = 12;
  std::uint64_t seed = 0;

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("kind", kind, "knapsack | ssg | rank1 | quadratic | hyperbolic")->required();
  gen->add_option("--n", n, "number of variables");
  gen->add_option("--coeff-bound", bound_text, "coefficient magnitude bound (decimal)");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "locate the exact optimal value");
  solve->add_option("--in", in_path, "instance JSON")->required();
  solve->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "brute"}));
  solve->add_option("--max-n", max_n, "brute-force dimension limit");
  solve->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* decide = app.add_subcommand("decide", "decide uniqueness of the optimum");
  decide->add_option("--in", in_path, "instance JSON")->required();
  decide->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "brute"}));
  decide->add_option("--max-n", max_n, "brute-force dimension limit");
  decide->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* reduce = app.add_subcommand("reduce", "compile an instance down the chain");
  reduce->add_option("--in", in_path, "instance JSON")->required();
  reduce->add_option("--from", from, "expected input kind (checked)");
  reduce->add_option("--to", to, "ssg | rank1 | hyperbolic")->required();
  reduce->add_option("--max-n", max_n, "feasibility-check limit");
  reduce->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check optimizer bijections by brute force");
  verify->add_option("--in", in_path, "instance JSON")->required();
  verify->add_option("--to", to, "ssg | rank1 | hyperbolic | all");
  verify->add_option("--limit", limit, "bijection enumeration limit");
  verify->add_option("--max-n", max_n, "brute-force dimension limit");
  verify->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (gen->parsed()) return cmd_gen(kind, n, bound_text, seed, out_path);
    if (solve->parsed()) return cmd_solve(in_path, engine, max_n, out_path);
    if (decide->parsed()) return cmd_decide(in_path, engine, max_n, out_path);
    if (reduce->parsed()) return cmd_reduce(in_path, from, to, max_n, out_path);
    if (verify->parsed()) {
      if (limit > max_n) throw Error("--limit must not exceed --max-n");
      return cmd_verify(in_path, to, limit, out_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
