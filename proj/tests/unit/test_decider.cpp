#include <doctest.h>

#include "uniq01/decider.hpp"
#include "uniq01/errors.hpp"
#include "uniq01/generate.hpp"
#include "uniq01/json_io.hpp"
#include "uniq01/reductions.hpp"

#include "../support/reference.hpp"

using namespace uniq01;
using testref::bits;
using testref::make_hyperbolic;
using testref::make_knapsack;
using testref::make_quadratic;
using testref::make_rank1;
using testref::make_ssg;

namespace {

unsigned long integer_budget(const Int& s) { return ceil_log2(2 * s + 1); }
unsigned long rational_budget(const Int& s) { return ceil_log2(4 * s * s * s) + 2; }

std::vector<Objective> suite_objectives(std::uint64_t seed) {
  std::size_t n = 1 + seed % 10;
  return {
      Objective{MinimizeQuadratic{gen_quadratic(n, 30, seed)}},
      Objective{MinimizeQuadratic{gen_rank1(n, 30, seed)}},
      Objective{MinimizeSsg{gen_ssg(n, 30, seed)}},
      Objective{MaximizeKnapsackProfit{gen_knapsack(n, 30, seed)}},
      Objective{MaximizeHyperbolic{gen_hyperbolic(n, 30, seed)}},
  };
}

}  // namespace

TEST_CASE("solve_min_quadratic follows the traced search") {
  EnumerationOracle oracle;
  IntegerSearchOutcome out = solve_min_quadratic(make_quadratic({{-1}}), oracle);
  CHECK(out.optimum == -1);
  CHECK(out.witness == bits({1}));
  // S = 1: interval [-1, 1], midpoints 0 then -1
  CHECK(out.stats.threshold_queries == 2);
  CHECK(out.stats.witness_queries == 0);
}

TEST_CASE("solve_min_quadratic short-circuits the all-zero matrix") {
  EnumerationOracle oracle;
  QuadraticProgram zero;
  zero.matrix.assign(3, {Int(0), Int(0), Int(0)});
  IntegerSearchOutcome out = solve_min_quadratic(zero, oracle);
  CHECK(out.optimum == 0);
  CHECK(out.witness == Assignment::zeros(3));
  CHECK(out.stats.threshold_queries == 0);
}

TEST_CASE("solve_min_quadratic handles the rank-1 image of q=(5), Q=5") {
  EnumerationOracle oracle;
  IntegerSearchOutcome out = solve_min_quadratic(make_rank1({5, -15}, {5, 5}), oracle);
  CHECK(out.optimum == -100);
  CHECK(out.witness == bits({1, 1}));
  // equals (sum q x - Q)^2 - 4 Q^2 at the optimizer
  CHECK(out.optimum == Int(5 - 5) * Int(5 - 5) - 4 * Int(5) * Int(5));
  CHECK(out.stats.threshold_queries <= integer_budget(Int(200)));
}

TEST_CASE("solve_max_hyperbolic returns exact reduced optima") {
  EnumerationOracle oracle;

  HyperbolicProgram constant = make_hyperbolic(3, {}, 2, {});
  RationalSearchOutcome c = solve_max_hyperbolic(constant, oracle);
  CHECK(c.optimum == make_rat(3, 2));
  CHECK(c.witness == Assignment::zeros(0));

  HyperbolicProgram tiny = make_hyperbolic(2, {1}, 3, {-2});
  RationalSearchOutcome t = solve_max_hyperbolic(tiny, oracle);
  CHECK(t.optimum == Rat(3));
  CHECK(t.witness == bits({1}));

  HyperbolicProgram worked =
      knapsack_to_hyperbolic(make_knapsack({1, 2, 3}, {6, 10, 12}, 3));
  RationalSearchOutcome w = solve_max_hyperbolic(worked, oracle);
  CHECK(w.optimum == Rat(18));
  CHECK(w.optimum.get_den() == 1);
  CHECK(w.witness == bits({1, 1, 0}));

  HyperbolicProgram dead = make_hyperbolic(1, {1}, 0, {0});
  CHECK_THROWS_AS(solve_max_hyperbolic(dead, oracle), NoFeasiblePoint);
}

TEST_CASE("decide_unique settles the three worked knapsack cases") {
  EnumerationOracle oracle;

  UniquenessReport unique =
      decide_unique(Objective{MaximizeKnapsackProfit{make_knapsack({1, 2, 3}, {6, 10, 12}, 3)}},
                    oracle);
  CHECK(unique.status == Status::unique);
  CHECK(*unique.optimal_value == Rat(16));
  REQUIRE(unique.witnesses.size() == 1);
  CHECK(unique.witnesses[0] == bits({1, 1, 0}));
  CHECK(unique.stats.witness_queries == 1);
  CHECK(unique.method == "oracle");

  UniquenessReport multiple = decide_unique(
      Objective{MaximizeKnapsackProfit{make_knapsack({1, 1}, {1, 1}, 1)}}, oracle);
  CHECK(multiple.status == Status::multiple);
  CHECK(*multiple.optimal_value == Rat(1));
  REQUIRE(multiple.witnesses.size() == 2);
  CHECK(multiple.witnesses[0] == bits({0, 1}));
  CHECK(multiple.witnesses[1] == bits({1, 0}));

  UniquenessReport infeasible =
      decide_unique(Objective{MaximizeKnapsackProfit{make_knapsack({2}, {1}, 1)}}, oracle);
  CHECK(infeasible.status == Status::infeasible);
  CHECK_FALSE(infeasible.optimal_value.has_value());
  CHECK(infeasible.witnesses.empty());
  CHECK(infeasible.stats.witness_queries == 0);
}

TEST_CASE("brute_force_unique runs the same report contract without queries") {
  UniquenessReport square = brute_force_unique(Objective{MinimizeQuadratic{make_rank1({1, -1}, {1, -1})}});
  CHECK(square.status == Status::multiple);
  CHECK(*square.optimal_value == Rat(0));
  CHECK(square.method == "brute");
  CHECK(square.stats == OracleStats{});

  UniquenessReport ssg =
      brute_force_unique(Objective{MinimizeSsg{make_ssg({90, 178, 264}, 280)}});
  CHECK(ssg.status == Status::unique);
  CHECK(*ssg.optimal_value == Rat(12));
  REQUIRE(ssg.witnesses.size() == 1);
  CHECK(ssg.witnesses[0] == bits({1, 1, 0}));

  UniquenessReport hyper = brute_force_unique(Objective{
      MaximizeHyperbolic{knapsack_to_hyperbolic(make_knapsack({1, 2, 3}, {6, 10, 12}, 3))}});
  CHECK(hyper.status == Status::unique);
  CHECK(*hyper.optimal_value == Rat(18));

  CHECK_THROWS_AS(brute_force_unique(Objective{MinimizeSsg{gen_ssg(8, 5, 1)}}, 6), TooLarge);
}

TEST_CASE("oracle decisions agree with the brute-force referee") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (const Objective& obj : suite_objectives(seed)) {
      EnumerationOracle oracle;
      UniquenessReport fast = decide_unique(obj, oracle);
      UniquenessReport slow = brute_force_unique(obj);
      CHECK(fast.status == slow.status);
      CHECK(fast.optimal_value == slow.optimal_value);
      CHECK(fast.witnesses == slow.witnesses);
    }
  }
}

TEST_CASE("query budgets hold with exactly one two-witness query") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (const Objective& obj : suite_objectives(seed)) {
      EnumerationOracle oracle;
      UniquenessReport report = decide_unique(obj, oracle);
      Int s = magnitude_bound(obj);
      if (report.status == Status::infeasible) {
        CHECK(report.stats.threshold_queries <= 2);
        CHECK(report.stats.witness_queries == 0);
        continue;
      }
      CHECK(report.stats.witness_queries == 1);
      if (sgn(s) == 0) {
        CHECK(report.stats.threshold_queries <= 1);
      } else if (integer_valued(obj)) {
        CHECK(report.stats.threshold_queries <= integer_budget(s));
      } else {
        CHECK(report.stats.threshold_queries <= rational_budget(s));
      }
    }
  }
}

TEST_CASE("subset-sum searches that end at the upper bound recover a witness") {
  // every subset misses a positive goal by the same margin: c* == S
  Objective obj{MinimizeSsg{make_ssg({0, 0}, 5)}};
  EnumerationOracle oracle;
  UniquenessReport report = decide_unique(obj, oracle);
  CHECK(report.status == Status::multiple);
  CHECK(*report.optimal_value == Rat(5));
  CHECK(report.witnesses[0] == bits({0, 0}));
  CHECK(report.stats.threshold_queries <= integer_budget(Int(5)));
  CHECK(brute_force_unique(obj).status == Status::multiple);
}

TEST_CASE("uniqueness transports across the whole reduction chain") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    KnapsackInstance inst =
        pad_feasible(normalize_profit(gen_knapsack(1 + seed % 6, 12, seed * 31)));
    SubsetSumGoalInstance ssg = knapsack_to_ssg(inst);

    EnumerationOracle oracle;
    Status expected =
        decide_unique(Objective{MaximizeKnapsackProfit{inst}}, oracle).status;
    CHECK(expected != Status::infeasible);
    CHECK(decide_unique(Objective{MinimizeSsg{ssg}}, oracle).status == expected);
    CHECK(decide_unique(Objective{MinimizeQuadratic{ssg_to_rank1(ssg)}}, oracle).status ==
          expected);
    CHECK(decide_unique(Objective{MaximizeHyperbolic{knapsack_to_hyperbolic(inst)}}, oracle)
              .status == expected);
  }
}

TEST_CASE("degenerate dimensions and all-zero instances") {
  EnumerationOracle oracle;

  // empty knapsack: the empty set is the unique optimum, no queries needed
  UniquenessReport empty =
      decide_unique(Objective{MaximizeKnapsackProfit{make_knapsack({}, {}, 0)}}, oracle);
  CHECK(empty.status == Status::unique);
  CHECK(*empty.optimal_value == Rat(0));
  REQUIRE(empty.witnesses.size() == 1);
  CHECK(empty.witnesses[0] == Assignment::zeros(0));
  CHECK(empty.stats.threshold_queries == 0);

  // all-zero knapsack with n >= 1: every subset is feasible and optimal
  Objective all_zero{MaximizeKnapsackProfit{make_knapsack({0, 0}, {0, 0}, 0)}};
  UniquenessReport zeros = decide_unique(all_zero, oracle);
  CHECK(zeros.status == Status::multiple);
  CHECK(zeros.witnesses[0] == bits({0, 0}));
  CHECK(zeros.witnesses[1] == bits({0, 1}));
  CHECK(brute_force_unique(all_zero) ==
        UniquenessReport{Status::multiple, Rat(0), {bits({0, 0}), bits({0, 1})}, {}, "brute", ""});

  // zero-dimensional quadratic program: the empty assignment is the optimum
  QuadraticProgram trivial;
  UniquenessReport quad = decide_unique(Objective{MinimizeQuadratic{trivial}}, oracle);
  CHECK(quad.status == Status::unique);
  CHECK(*quad.optimal_value == Rat(0));

  // zero total profit with nonzero weights: the profit search collapses to
  // the feasibility probe
  Objective flat{MaximizeKnapsackProfit{make_knapsack({1, 1}, {0, 0}, 1)}};
  UniquenessReport probe_only = decide_unique(flat, oracle);
  CHECK(probe_only.status == Status::multiple);
  CHECK(*probe_only.optimal_value == Rat(0));
  CHECK(probe_only.stats.threshold_queries == 1);
  CHECK(probe_only == [&] {
    UniquenessReport b = brute_force_unique(flat);
    b.stats = probe_only.stats;
    b.method = "oracle";
    b.phase1 = probe_only.phase1;
    return b;
  }());
}

TEST_CASE("solve_optimum covers every family and reports infeasibility") {
  EnumerationOracle oracle;

  auto ssg = solve_optimum(Objective{MinimizeSsg{make_ssg({90, 178, 264}, 280)}}, oracle);
  REQUIRE(ssg.has_value());
  CHECK(ssg->optimum == Rat(12));
  CHECK(ssg->witness == bits({1, 1, 0}));

  auto quad = solve_optimum(Objective{MinimizeQuadratic{make_quadratic({{-1}})}}, oracle);
  REQUIRE(quad.has_value());
  CHECK(quad->optimum == Rat(-1));

  auto knap = solve_optimum(
      Objective{MaximizeKnapsackProfit{make_knapsack({1, 2, 3}, {6, 10, 12}, 3)}}, oracle);
  REQUIRE(knap.has_value());
  CHECK(knap->optimum == Rat(16));

  auto hyper = solve_optimum(
      Objective{MaximizeHyperbolic{make_hyperbolic(2, {1}, 3, {-2})}}, oracle);
  REQUIRE(hyper.has_value());
  CHECK(hyper->optimum == Rat(3));

  CHECK_FALSE(
      solve_optimum(Objective{MaximizeKnapsackProfit{make_knapsack({2}, {1}, 1)}}, oracle)
          .has_value());
}

TEST_CASE("report JSON carries the documented fields") {
  EnumerationOracle oracle;
  UniquenessReport report =
      decide_unique(Objective{MaximizeKnapsackProfit{make_knapsack({1, 2, 3}, {6, 10, 12}, 3)}},
                    oracle);
  Json j = to_json(report);
  CHECK(j["status"] == "unique");
  CHECK(j["optimal_value"]["num"] == "16");
  CHECK(j["optimal_value"]["den"] == "1");
  CHECK(j["witnesses"] == Json::array({Json::array({1, 1, 0})}));
  CHECK(j["stats"]["witness_queries"] == 1);
  CHECK(j["stats"].contains("threshold_queries"));
  CHECK(j["stats"].contains("assignments_examined"));
  CHECK(j["method"] == "oracle");
  CHECK(j["phase1"] == "integer-binary-search");

  EnumerationOracle hyper_oracle;
  Json jh = to_json(decide_unique(
      Objective{MaximizeHyperbolic{make_hyperbolic(2, {1}, 3, {-2})}}, hyper_oracle));
  CHECK(jh["phase1"] == "dyadic-stern-brocot");
  CHECK_FALSE(
      to_json(brute_force_unique(Objective{MinimizeSsg{make_ssg({1}, 1)}})).contains("phase1"));

  UniquenessReport infeasible =
      decide_unique(Objective{MaximizeKnapsackProfit{make_knapsack({2}, {1}, 1)}}, oracle);
  Json ji = to_json(infeasible);
  CHECK_FALSE(ji.contains("optimal_value"));
  CHECK(ji["witnesses"] == Json::array());
}
