#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "uniq01/exact.hpp"

namespace uniq01 {

/// A 0-1 vector. bits[i] holds x_{i+1}, and the assignment doubles as the
/// item set {i : bits[i] == 1}. Ordering is lexicographic with x_1 most
/// significant, which is the tie-breaking order used by every witness in
/// this library.
struct Assignment {
  std::vector<std::uint8_t> bits;

  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static Assignment zeros(std::size_t n) { return Assignment(std::vector<std::uint8_t>(n, 0)); }

  /// Bit n-1-i of mask becomes x_{i+1}, so counting masks upward walks
  /// assignments in lexicographic order.
  static Assignment from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const { return bits.size(); }

  bool operator==(const Assignment&) const = default;
  auto operator<=>(const Assignment&) const = default;
};

/// Standard knapsack: non-negative integer weights and profits, weight
/// bound W. A subset I is feasible iff w(I) == W exactly; the goal is to
/// maximize p(I) over feasible subsets.
struct KnapsackInstance {
  std::vector<Int> weights;
  std::vector<Int> profits;
  Int bound;

  std::size_t size() const { return weights.size(); }
  Int total_weight() const;
  Int total_profit() const;  // P

  bool operator==(const KnapsackInstance&) const = default;
};

/// Subset sum with goal value: minimize |q(I) - Q| over subsets I.
struct SubsetSumGoalInstance {
  std::vector<Int> weights;
  Int goal;

  std::size_t size() const { return weights.size(); }
  Int total_weight() const;

  bool operator==(const SubsetSumGoalInstance&) const = default;
};

/// constant + sum(coeffs[i] * x_{i+1}).
struct LinearForm {
  Int constant;
  std::vector<Int> coeffs;

  std::size_t size() const { return coeffs.size(); }

  bool operator==(const LinearForm&) const = default;
};

Int eval_linear(const LinearForm& form, const Assignment& x);

/// Objective (u . x)(v . x); both forms have constant 0. Equivalent to the
/// quadratic program with matrix u v^T.
struct Rank1QuadraticProgram {
  LinearForm u;
  LinearForm v;

  std::size_t dimension() const { return u.coeffs.size(); }

  bool operator==(const Rank1QuadraticProgram&) const = default;
};

/// Objective x^T A x over 0-1 vectors. A is a general square integer
/// matrix; it is not required to be symmetric, since x^T A x only depends
/// on A + A^T and symmetrizing an integer matrix can leave half-integers.
struct QuadraticProgram {
  std::vector<std::vector<Int>> matrix;

  std::size_t dimension() const { return matrix.size(); }

  bool operator==(const QuadraticProgram&) const = default;
};

/// Ratio of two affine integer forms, maximized over 0-1 vectors. The
/// denominator may change sign; assignments with denominator 0 are
/// infeasible and excluded from maximization.
struct HyperbolicProgram {
  LinearForm numerator;    // a_0; a_1..a_n
  LinearForm denominator;  // b_0; b_1..b_n

  std::size_t dimension() const { return numerator.coeffs.size(); }

  bool operator==(const HyperbolicProgram&) const = default;
};

// Structural invariants (lengths agree, required non-negativity, bits are
// 0/1). Throw std::invalid_argument; the JSON layer converts to ParseError.
void validate(const KnapsackInstance& inst);
void validate(const SubsetSumGoalInstance& inst);
void validate(const Rank1QuadraticProgram& prog);
void validate(const QuadraticProgram& prog);
void validate(const HyperbolicProgram& prog);
void validate(const Assignment& x);

/// Returns (w(I), p(I)). Throws DimensionMismatch when x.size() != n.
std::pair<Int, Int> eval_knapsack(const KnapsackInstance& inst, const Assignment& x);

/// True iff w(I) == W exactly.
bool is_feasible(const KnapsackInstance& inst, const Assignment& x);

/// |q(I) - Q|.
Int eval_ssg(const SubsetSumGoalInstance& inst, const Assignment& x);

/// (u . x)(v . x).
Int eval_rank1(const Rank1QuadraticProgram& prog, const Assignment& x);

/// sum_{i,j} A_ij x_i x_j.
Int eval_quadratic(const QuadraticProgram& prog, const Assignment& x);

/// Outer product u v^T. eval_quadratic on the result agrees with eval_rank1
/// on the input for every assignment.
QuadraticProgram rank1_to_matrix(const Rank1QuadraticProgram& prog);

/// Reduced exact value N(x)/D(x). Throws ZeroDenominator when D(x) == 0.
Rat eval_hyperbolic(const HyperbolicProgram& prog, const Assignment& x);

/// S = sum of |A_ij|.
Int coefficient_sum(const QuadraticProgram& prog);

/// S = sum_{i=0..n} |a_i| + sum_{i=0..n} |b_i|.
Int coefficient_sum(const HyperbolicProgram& prog);

}  // namespace uniq01
