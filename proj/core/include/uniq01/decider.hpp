#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniq01/model.hpp"
#include "uniq01/oracle.hpp"

namespace uniq01 {

enum class Status { unique, multiple, infeasible };

const char* to_string(Status s);

/// Outcome of a uniqueness decision. status == unique carries exactly one
/// witness, multiple carries the two lexicographically smallest optimizers
/// with equal value, infeasible carries neither witnesses nor a value.
struct UniquenessReport {
  Status status = Status::infeasible;
  std::optional<Rat> optimal_value;
  std::vector<Assignment> witnesses;
  OracleStats stats;
  std::string method;  // "oracle" or "brute"
  /// Oracle-engine search variant: "integer-binary-search" for the integer
  /// families, "dyadic-stern-brocot" for the hyperbolic rational search.
  /// Empty for the brute engine.
  std::string phase1;

  bool operator==(const UniquenessReport&) const = default;
};

struct IntegerSearchOutcome {
  Int optimum;
  Assignment witness;
  OracleStats stats;  // queries spent by this search alone
};

struct RationalSearchOutcome {
  Rat optimum;
  Assignment witness;
  OracleStats stats;
};

/// Exact minimum of x^T A x over 0-1 vectors by binary search on [-S, S]
/// with S the coefficient sum, mid = floor((lo+hi)/2), keeping the
/// invariant lo <= c* <= hi. Uses at most ceil(log2(2S+1)) threshold
/// queries for S >= 1; S == 0 short-circuits to 0 with no queries.
IntegerSearchOutcome solve_min_quadratic(const QuadraticProgram& prog,
                                         EnumerationOracle& oracle);
IntegerSearchOutcome solve_min_quadratic(const Rank1QuadraticProgram& prog,
                                         EnumerationOracle& oracle);

/// Exact maximum of a hyperbolic program. One query at S, then (when t* is
/// not settled there) one probe at -S, then binary search over dyadic
/// thresholds until the bracket is narrower than 1/S^2, and finally the
/// optimum is reconstructed as the unique rational with denominator <= S in
/// [lo, hi) via simplest_rational_in. At most ceil(log2(4 S^3)) + 2
/// threshold queries. Throws NoFeasiblePoint when every assignment has
/// zero denominator.
RationalSearchOutcome solve_max_hyperbolic(const HyperbolicProgram& prog,
                                           EnumerationOracle& oracle);

/// The rational in [lo, hi) with the smallest denominator (ties broken by
/// smallest absolute numerator), found by continued-fraction descent on the
/// interval endpoints. Requires lo < hi.
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

/// Phase 1 alone: the family's matching optimum search, returning the exact
/// optimum and one witness, or nullopt when the objective is infeasible.
std::optional<RationalSearchOutcome> solve_optimum(const Objective& obj,
                                                   EnumerationOracle& oracle);

/// Phase 1 locates the exact optimum with the family's matching search,
/// phase 2 asks the oracle for two distinct optimizers at that value.
/// Knapsack instances with no subset of weight exactly W and hyperbolic
/// programs with identically zero denominator come back infeasible.
UniquenessReport decide_unique(const Objective& obj, EnumerationOracle& oracle);

/// Independent referee: a single full enumeration through the plain
/// per-assignment evaluators, no oracle involved. Same report contract as
/// decide_unique with zero oracle stats. Throws TooLarge above the limit.
UniquenessReport brute_force_unique(const Objective& obj,
                                    std::size_t limit = EnumerationOracle::kDefaultLimit);

}  // namespace uniq01
