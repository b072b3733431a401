#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uniq01/model.hpp"
#include "uniq01/oracle.hpp"

namespace uniq01 {

enum class MapDirection { forward, backward };

/// How an optimizer is carried across a reduction. Appended auxiliary or
/// normalization variables are always last, so maps stay positional.
enum class MapRule {
  identity_on_items,
  add_auxiliary_variable_set_to_1,
  drop_auxiliary_variable,
};

struct SolutionMap {
  MapDirection direction = MapDirection::forward;
  MapRule rule = MapRule::identity_on_items;

  bool operator==(const SolutionMap&) const = default;
};

/// The same map run the other way (add <-> drop).
SolutionMap reversed(const SolutionMap& map);

/// Applies the map's rule. drop_auxiliary_variable requires the last bit to
/// be 1 and throws NotAnOptimizerShape otherwise.
Assignment map_optimizer(const SolutionMap& map, const Assignment& x);

/// Result of exhaustively checking that a solution map restricted to
/// optimizers is a bijection onto optimizers.
struct BijectionReport {
  Int left_count = 0;
  Int right_count = 0;
  bool matched = false;
  /// Lexicographically smallest failure. Either a source optimizer whose
  /// image is not optimal (both sides set) or a target optimizer missed by
  /// the map (source side empty).
  std::optional<Assignment> counterexample_source;
  std::optional<Assignment> counterexample_target;
};

/// If P >= 1 the instance is returned unchanged; if P == 0 one item with
/// weight 0 and profit 1 is appended. The new item is in every optimizer of
/// the new instance and never affects feasibility, so optimizer sets
/// correspond via I -> I + {new item}.
KnapsackInstance normalize_profit(const KnapsackInstance& inst);

/// Returns the instance unchanged when some subset attains w(I) == W
/// (decided exhaustively for n <= limit); otherwise appends one item with
/// weight W and profit 0. Above the limit the dummy is appended
/// unconditionally.
KnapsackInstance pad_feasible(const KnapsackInstance& inst,
                              std::size_t limit = EnumerationOracle::kDefaultLimit);

/// Subset-sum image with q_i = 3 w_i P + p_i and Q = (3W+1) P. Requires
/// P >= 1 (throws ProfitSumZero). Optimizers of the image are exactly the
/// optimal feasible sets of the knapsack instance, as item sets.
SubsetSumGoalInstance knapsack_to_ssg(const KnapsackInstance& inst);

/// (n+1)-variable product-of-linear-forms image with u = (q_1..q_n, -3Q)
/// and v = (q_1..q_n, Q). Requires Q >= 1 (throws GoalZero). Minimizers
/// have x_{n+1} = 1 and their first n bits are the subset-sum optimizers.
Rank1QuadraticProgram ssg_to_rank1(const SubsetSumGoalInstance& inst);

/// Hyperbolic image with a_0 = 2, a_i = p_i, b_0 = 1 + 2PW, b_i = -2P w_i.
/// Requires P >= 1 (ProfitSumZero) and a feasible subset, checked
/// exhaustively for n <= limit (InfeasibleInstance); run normalize_profit
/// and pad_feasible first. Maximizers correspond one-to-one with optimal
/// feasible knapsack sets.
HyperbolicProgram knapsack_to_hyperbolic(const KnapsackInstance& inst,
                                         std::size_t limit = EnumerationOracle::kDefaultLimit);

/// Exhaustively enumerates optimizers on both sides and checks that the map
/// restricted to source optimizers is a bijection onto target optimizers.
/// Throws TooLarge when either side's dimension exceeds the limit.
BijectionReport verify_bijection(const Objective& source, const Objective& target,
                                 const SolutionMap& map, std::size_t limit);

/// All feasible assignments attaining the optimum, in lexicographic order.
/// Empty when nothing is feasible. Throws TooLarge above the limit.
std::vector<Assignment> enumerate_optimizers(const Objective& obj, std::size_t limit);

}  // namespace uniq01
