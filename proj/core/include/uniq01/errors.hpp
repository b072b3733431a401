#pragma once

#include <stdexcept>
#include <string>

namespace uniq01 {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An assignment's length does not match the instance dimension.
struct DimensionMismatch : Error {
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " bits, got " + std::to_string(got)) {}
};

/// A hyperbolic objective was evaluated at a point with zero denominator,
/// or a rational was built with denominator 0.
struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
};

/// A knapsack-sourced reduction was given an instance with total profit 0.
struct ProfitSumZero : Error {
  ProfitSumZero() : Error("ProfitSumZero: total profit is 0; run normalize_profit first") {}
};

/// ssg_to_rank1 was given a goal value of 0.
struct GoalZero : Error {
  GoalZero() : Error("GoalZero: goal value is 0") {}
};

/// A backward solution map saw an assignment whose auxiliary bit is 0.
struct NotAnOptimizerShape : Error {
  NotAnOptimizerShape() : Error("NotAnOptimizerShape: auxiliary bit is not set") {}
};

/// Instance dimension exceeds the configured brute-force limit.
struct TooLarge : Error {
  TooLarge(std::size_t dimension, std::size_t limit)
      : Error("TooLarge: dimension " + std::to_string(dimension) +
              " exceeds brute-force limit " + std::to_string(limit)) {}
};

/// A maximization objective has no feasible assignment at all.
struct NoFeasiblePoint : Error {
  NoFeasiblePoint() : Error("NoFeasiblePoint: no feasible assignment exists") {}
};

/// knapsack_to_hyperbolic requires at least one feasible subset.
struct InfeasibleInstance : Error {
  InfeasibleInstance()
      : Error("InfeasibleInstance: no subset attains the weight bound; run pad_feasible first") {}
};

/// Malformed instance document (bad JSON, bad shape, or violated invariant).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace uniq01
