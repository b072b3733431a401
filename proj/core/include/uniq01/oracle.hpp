#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "uniq01/model.hpp"

namespace uniq01 {

/// Cumulative query accounting for one oracle session. Counts only grow.
/// two_optima_at and count_optima both count as witness queries.
struct OracleStats {
  std::uint64_t threshold_queries = 0;
  std::uint64_t witness_queries = 0;
  std::uint64_t assignments_examined = 0;

  bool operator==(const OracleStats&) const = default;
};

OracleStats operator-(const OracleStats& after, const OracleStats& before);

// The four objective families. Quadratic and rank-1 are minimized;
// knapsack (over subsets with w(I) == W) and hyperbolic (over assignments
// with nonzero denominator) are maximized.
struct MinimizeQuadratic {
  std::variant<QuadraticProgram, Rank1QuadraticProgram> program;
};
struct MaximizeHyperbolic {
  HyperbolicProgram program;
};
struct MaximizeKnapsackProfit {
  KnapsackInstance instance;
};
struct MinimizeSsg {
  SubsetSumGoalInstance instance;
};

using Objective = std::variant<MinimizeQuadratic, MaximizeHyperbolic,
                               MaximizeKnapsackProfit, MinimizeSsg>;

std::size_t dimension(const Objective& obj);
bool is_maximization(const Objective& obj);
bool integer_valued(const Objective& obj);

/// True iff x participates in the optimization (knapsack: w(I) == W;
/// hyperbolic: D(x) != 0; the others: always).
bool is_objective_feasible(const Objective& obj, const Assignment& x);

/// Exact objective value at a feasible x. Integer families come back with
/// denominator 1. Goes through the plain per-assignment evaluators, not the
/// oracle's incremental scanner, so the two can cross-check each other.
Rat objective_value(const Objective& obj, const Assignment& x);

/// Bound S on the magnitude of any achievable objective value:
/// quadratic sum|A_ij|; rank-1 (sum|u_i|)(sum|v_j|); hyperbolic
/// sum|a_i| + sum|b_i|; knapsack sum w + sum p + W; subset-sum sum q + Q.
/// For the hyperbolic family, achievable values are rationals with
/// numerator and denominator magnitudes at most S.
Int magnitude_bound(const Objective& obj);

/// The NP-oracle of the decision procedures, realized by exhaustive
/// enumeration in lexicographic order (x_1 most significant). Witnesses are
/// always the lexicographically smallest qualifying assignments, so every
/// downstream report is reproducible. Dimensions above the configured limit
/// are a hard error.
///
/// Queries are pure with respect to the instance; the stats counters are
/// the only mutable state and are safe under concurrent query issuance.
class EnumerationOracle {
 public:
  static constexpr std::size_t kDefaultLimit = 24;

  explicit EnumerationOracle(std::size_t max_dimension = kDefaultLimit)
      : max_dimension_(max_dimension) {}

  /// Lexicographically smallest feasible x with value(x) <= c, if any.
  /// Requires a minimizing objective. Throws TooLarge.
  std::optional<Assignment> exists_at_most(const Objective& obj, const Int& c);

  /// Lexicographically smallest feasible x with value(x) >= t, if any.
  /// Requires a maximizing objective. Throws TooLarge, and NoFeasiblePoint
  /// when the objective has no feasible assignment at all.
  std::optional<Assignment> exists_at_least(const Objective& obj, const Rat& t);

  /// The two lexicographically smallest distinct feasible assignments with
  /// value exactly v, or empty when fewer than two exist.
  std::optional<std::pair<Assignment, Assignment>> two_optima_at(const Objective& obj,
                                                                 const Rat& v);

  /// Number of feasible assignments with value exactly v, truncated at cap.
  std::uint64_t count_optima(const Objective& obj, const Rat& v, std::uint64_t cap);

  OracleStats stats() const;
  std::size_t max_dimension() const { return max_dimension_; }

 private:
  void check_dimension(const Objective& obj) const;

  std::size_t max_dimension_;
  std::atomic<std::uint64_t> threshold_queries_{0};
  std::atomic<std::uint64_t> witness_queries_{0};
  std::atomic<std::uint64_t> assignments_examined_{0};
};

}  // namespace uniq01
