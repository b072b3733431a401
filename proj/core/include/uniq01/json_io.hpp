#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <variant>

#include "uniq01/decider.hpp"
#include "uniq01/model.hpp"
#include "uniq01/oracle.hpp"
#include "uniq01/reductions.hpp"

namespace uniq01 {

/// All documents use insertion-ordered objects and carry integers as
/// decimal strings, so values never hit 64-bit limits and output is
/// byte-stable.
using Json = nlohmann::ordered_json;

using AnyInstance = std::variant<KnapsackInstance, SubsetSumGoalInstance,
                                 Rank1QuadraticProgram, QuadraticProgram, HyperbolicProgram>;

const char* kind_name(const AnyInstance& inst);

/// Wraps an instance in its natural optimization sense: knapsack maximizes
/// profit over subsets of weight exactly W, subset-sum and the quadratic
/// kinds minimize, hyperbolic maximizes.
Objective objective_for(const AnyInstance& inst);

Json to_json(const KnapsackInstance& inst);
Json to_json(const SubsetSumGoalInstance& inst);
Json to_json(const Rank1QuadraticProgram& prog);
Json to_json(const QuadraticProgram& prog);
Json to_json(const HyperbolicProgram& prog);
Json to_json(const AnyInstance& inst);
Json to_json(const Assignment& x);
Json to_json(const OracleStats& stats);
Json to_json(const UniquenessReport& report);
Json to_json(const SolutionMap& map);
Json to_json(const BijectionReport& report);

/// Reads any of the five instance documents; {"instance": {...}} envelopes
/// (as emitted by the reduce command) are unwrapped. Throws ParseError.
AnyInstance instance_from_json(const Json& j);

/// instance_from_json over raw text.
AnyInstance parse_instance_text(std::string_view text);

/// Canonical text form: two-space indentation plus a trailing newline.
std::string to_text(const Json& j);

}  // namespace uniq01
