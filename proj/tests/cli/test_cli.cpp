#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "uniq01/json_io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(UNIQ01_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_path(const std::string& name) {
  return std::string(UNIQ01_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("decide reproduces the golden reports byte for byte") {
  const struct {
    const char* instance;
    const char* golden;
    int exit_code;
  } cases[] = {
      {"knapsack_unique.json", "golden/decide_unique.json", 0},
      {"knapsack_multiple.json", "golden/decide_multiple.json", 1},
      {"knapsack_infeasible.json", "golden/decide_infeasible.json", 2},
  };
  for (const auto& c : cases) {
    RunResult first = run_cli("decide --in " + data_path(c.instance));
    RunResult second = run_cli("decide --in " + data_path(c.instance));
    CHECK(first.exit_code == c.exit_code);
    CHECK(first.out == second.out);
    CHECK(first.out == slurp(data_path(c.golden)));
  }
}

TEST_CASE("brute engine agrees on status and value") {
  RunResult oracle = run_cli("decide --in " + data_path("knapsack_unique.json"));
  RunResult brute =
      run_cli("decide --engine brute --in " + data_path("knapsack_unique.json"));
  CHECK(brute.exit_code == 0);
  uniq01::Json a = uniq01::Json::parse(oracle.out);
  uniq01::Json b = uniq01::Json::parse(brute.out);
  CHECK(a["status"] == b["status"]);
  CHECK(a["optimal_value"] == b["optimal_value"]);
  CHECK(a["witnesses"] == b["witnesses"]);
  CHECK(b["method"] == "brute");
  CHECK(b["stats"]["threshold_queries"] == 0);
}

TEST_CASE("gen is deterministic and honors its parameter contract") {
  RunResult a = run_cli("gen knapsack --n 5 --coeff-bound 50 --seed 42");
  RunResult b = run_cli("gen knapsack --n 5 --coeff-bound 50 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult empty = run_cli("gen knapsack --n 0 --seed 1");
  uniq01::Json j = uniq01::Json::parse(empty.out);
  CHECK(j["weights"].empty());
  CHECK(j["bound"] == "0");

  RunResult hyper = run_cli("gen hyperbolic --n 3 --coeff-bound 9 --seed 7");
  auto inst = uniq01::parse_instance_text(hyper.out);
  const auto& prog = std::get<uniq01::HyperbolicProgram>(inst);
  CHECK(abs(prog.numerator.constant) <= 9);
  CHECK(abs(prog.denominator.constant) <= 9);
  for (const uniq01::Int& c : prog.numerator.coeffs) CHECK(abs(c) <= 9);
  for (const uniq01::Int& c : prog.denominator.coeffs) CHECK(abs(c) <= 9);

  CHECK(run_cli("gen mystery --n 3").exit_code == 13);
}

TEST_CASE("solve reports the exact optimum with exit 0, infeasible with 2") {
  RunResult solved = run_cli("solve --in " + data_path("knapsack_unique.json"));
  CHECK(solved.exit_code == 0);
  uniq01::Json j = uniq01::Json::parse(solved.out);
  CHECK(j["status"] == "solved");
  CHECK(j["optimal_value"]["num"] == "16");
  CHECK(j["witness"] == uniq01::Json::array({1, 1, 0}));

  RunResult infeasible = run_cli("solve --in " + data_path("knapsack_infeasible.json"));
  CHECK(infeasible.exit_code == 2);
}

TEST_CASE("parse failures exit 11, oversized instances exit 12") {
  std::string bad = temp_file("uniq01_bad_input.json", "{\"type\":\"knapsack\"");
  CHECK(run_cli("decide --in " + bad).exit_code == 11);
  CHECK(run_cli("decide --in /nonexistent/uniq01.json").exit_code == 11);

  RunResult big = run_cli("gen knapsack --n 26 --coeff-bound 9 --seed 5");
  std::string big_path = temp_file("uniq01_big_instance.json", big.out);
  CHECK(run_cli("decide --in " + big_path).exit_code == 12);
}

TEST_CASE("reduce emits the worked images with their solution maps") {
  RunResult to_ssg =
      run_cli("reduce --from knapsack --to ssg --in " + data_path("knapsack_unique.json"));
  CHECK(to_ssg.exit_code == 0);
  uniq01::Json j = uniq01::Json::parse(to_ssg.out);
  CHECK(j["instance"]["type"] == "subset_sum_goal");
  CHECK(j["instance"]["weights"] == uniq01::Json::array({"90", "178", "264"}));
  CHECK(j["instance"]["goal"] == "280");
  CHECK(j["solution_map"]["rule"] == "identity_on_items");
  CHECK(j["notices"].empty());

  std::string five = temp_file("uniq01_ssg5.json",
                               R"({"type":"subset_sum_goal","weights":["5"],"goal":"5"})");
  RunResult to_rank1 = run_cli("reduce --to rank1 --in " + five);
  uniq01::Json r = uniq01::Json::parse(to_rank1.out);
  CHECK(r["instance"]["type"] == "rank1_quadratic");
  CHECK(r["instance"]["u"] == uniq01::Json::array({"5", "-15"}));
  CHECK(r["instance"]["v"] == uniq01::Json::array({"5", "5"}));
  CHECK(r["solution_map"]["rule"] == "add_auxiliary_variable_set_to_1");

  RunResult to_hyper =
      run_cli("reduce --to hyperbolic --in " + data_path("knapsack_unique.json"));
  uniq01::Json h = uniq01::Json::parse(to_hyper.out);
  CHECK(h["instance"]["a0"] == "2");
  CHECK(h["instance"]["b0"] == "169");
  CHECK(h["instance"]["b"] == uniq01::Json::array({"-56", "-112", "-168"}));

  RunResult again =
      run_cli("reduce --to hyperbolic --in " + data_path("knapsack_unique.json"));
  CHECK(again.out == to_hyper.out);

  CHECK(run_cli("reduce --from ssg --to ssg --in " + data_path("knapsack_unique.json"))
            .exit_code == 13);
}

TEST_CASE("reduce normalizes zero-profit sources and says so") {
  std::string zero = temp_file(
      "uniq01_zero_profit.json",
      R"({"type":"knapsack","weights":["1","1"],"profits":["0","0"],"bound":"1"})");
  RunResult r = run_cli("reduce --to ssg --in " + zero);
  CHECK(r.exit_code == 0);
  uniq01::Json j = uniq01::Json::parse(r.out);
  REQUIRE(!j["notices"].empty());
  CHECK(j["notices"][0] == "profit normalized");
  CHECK(j.contains("prepared_source"));

  // goal zero is a reduction precondition failure, surfaced by name
  std::string goal_zero = temp_file("uniq01_goal_zero.json",
                                    R"({"type":"subset_sum_goal","weights":["3"],"goal":"0"})");
  CHECK(run_cli("reduce --to rank1 --in " + goal_zero).exit_code == 13);
}

TEST_CASE("reduce output feeds straight back into decide with the same verdict") {
  for (const char* name : {"knapsack_unique.json", "knapsack_multiple.json"}) {
    RunResult source = run_cli("decide --in " + data_path(name));
    for (const char* to : {"ssg", "rank1", "hyperbolic"}) {
      RunResult reduced =
          run_cli("reduce --to " + std::string(to) + " --in " + data_path(name));
      REQUIRE(reduced.exit_code == 0);
      std::string target =
          temp_file(std::string("uniq01_target_") + to + "_" + name, reduced.out);
      RunResult verdict = run_cli("decide --in " + target);
      CHECK(verdict.exit_code == source.exit_code);
    }
  }
}

TEST_CASE("verify checks all three bijections on the worked instance") {
  RunResult r = run_cli("verify --in " + data_path("knapsack_unique.json"));
  CHECK(r.exit_code == 0);
  uniq01::Json j = uniq01::Json::parse(r.out);
  CHECK(j["all_matched"] == true);
  REQUIRE(j["checks"].size() == 3);
  for (const auto& check : j["checks"]) {
    CHECK(check["report"]["matched"] == true);
    CHECK(check["report"]["left_count"] == check["report"]["right_count"]);
  }

  // normalization keeps the bijections intact
  std::string zero = temp_file(
      "uniq01_zero_profit2.json",
      R"({"type":"knapsack","weights":["1","1"],"profits":["0","0"],"bound":"1"})");
  CHECK(run_cli("verify --in " + zero).exit_code == 0);

  // infeasible sources get padded and still verify
  CHECK(run_cli("verify --in " + data_path("knapsack_infeasible.json")).exit_code == 0);
}

TEST_CASE("verify beyond the limit exits 12") {
  RunResult big = run_cli("gen knapsack --n 13 --coeff-bound 9 --seed 11");
  std::string path = temp_file("uniq01_verify_big.json", big.out);
  CHECK(run_cli("verify --limit 12 --in " + path).exit_code == 12);
  CHECK(run_cli("verify --limit 10 --max-n 9 --in " + path).exit_code == 13);
}
