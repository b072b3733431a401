#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "uniq01/json_io.hpp"

namespace uniq01 {

enum class InstanceKind { knapsack, subset_sum_goal, rank1_quadratic, quadratic, hyperbolic };

const char* to_string(InstanceKind kind);
std::optional<InstanceKind> kind_from_name(std::string_view name);

/// splitmix64. A fixed in-house generator keeps instance streams
/// byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound], rejection-sampled, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound_inclusive);

  /// Uniform Int in [0, bound] for arbitrary-precision bounds.
  Int next_int(const Int& bound_inclusive);

  /// Uniform Int in [-bound, bound].
  Int next_signed(const Int& bound);

 private:
  std::uint64_t state_;
};

// Deterministic instance families. Knapsack and subset-sum coefficients are
// uniform in [0, coeff_bound]; the quadratic and hyperbolic kinds draw from
// [-coeff_bound, coeff_bound]. The knapsack bound W is uniform over
// [0, sum of weights], so instances lean feasible without a guarantee; the
// subset-sum goal Q is drawn the same way.
KnapsackInstance gen_knapsack(std::size_t n, const Int& coeff_bound, std::uint64_t seed);
SubsetSumGoalInstance gen_ssg(std::size_t n, const Int& coeff_bound, std::uint64_t seed);
Rank1QuadraticProgram gen_rank1(std::size_t n, const Int& coeff_bound, std::uint64_t seed);
QuadraticProgram gen_quadratic(std::size_t n, const Int& coeff_bound, std::uint64_t seed);
HyperbolicProgram gen_hyperbolic(std::size_t n, const Int& coeff_bound, std::uint64_t seed);

AnyInstance generate_instance(InstanceKind kind, std::size_t n, const Int& coeff_bound,
                              std::uint64_t seed);

}  // namespace uniq01
