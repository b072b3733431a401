#include "uniq01/model.hpp"

#include <stdexcept>

#include "uniq01/errors.hpp"

namespace uniq01 {

namespace {

void check_dimension(std::size_t expected, const Assignment& x) {
  if (x.size() != expected) throw DimensionMismatch(expected, x.size());
}

Int abs_sum(const std::vector<Int>& values) {
  Int total = 0;
  for (const Int& v : values) total += abs(v);
  return total;
}

}  // namespace

Assignment Assignment::from_mask(std::uint64_t mask, std::size_t n) {
  Assignment x = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    x.bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
  return x;
}

Int KnapsackInstance::total_weight() const {
  Int total = 0;
  for (const Int& w : weights) total += w;
  return total;
}

Int KnapsackInstance::total_profit() const {
  Int total = 0;
  for (const Int& p : profits) total += p;
  return total;
}

Int SubsetSumGoalInstance::total_weight() const {
  Int total = 0;
  for (const Int& q : weights) total += q;
  return total;
}

Int eval_linear(const LinearForm& form, const Assignment& x) {
  check_dimension(form.size(), x);
  Int value = form.constant;
  for (std::size_t i = 0; i < form.size(); ++i)
    if (x.bits[i]) value += form.coeffs[i];
  return value;
}

void validate(const KnapsackInstance& inst) {
  if (inst.weights.size() != inst.profits.size())
    throw std::invalid_argument("knapsack: weights and profits differ in length");
  for (const Int& w : inst.weights)
    if (sgn(w) < 0) throw std::invalid_argument("knapsack: negative weight");
  for (const Int& p : inst.profits)
    if (sgn(p) < 0) throw std::invalid_argument("knapsack: negative profit");
  if (sgn(inst.bound) < 0) throw std::invalid_argument("knapsack: negative bound");
}

void validate(const SubsetSumGoalInstance& inst) {
  for (const Int& q : inst.weights)
    if (sgn(q) < 0) throw std::invalid_argument("subset_sum_goal: negative weight");
  if (sgn(inst.goal) < 0) throw std::invalid_argument("subset_sum_goal: negative goal");
}

void validate(const Rank1QuadraticProgram& prog) {
  if (prog.u.coeffs.size() != prog.v.coeffs.size())
    throw std::invalid_argument("rank1_quadratic: u and v differ in length");
  if (prog.u.constant != 0 || prog.v.constant != 0)
    throw std::invalid_argument("rank1_quadratic: factor constants must be 0");
}

void validate(const QuadraticProgram& prog) {
  for (const auto& row : prog.matrix)
    if (row.size() != prog.matrix.size())
      throw std::invalid_argument("quadratic: matrix is not square");
}

void validate(const HyperbolicProgram& prog) {
  if (prog.numerator.coeffs.size() != prog.denominator.coeffs.size())
    throw std::invalid_argument("hyperbolic: numerator and denominator differ in length");
}

void validate(const Assignment& x) {
  for (std::uint8_t b : x.bits)
    if (b > 1) throw std::invalid_argument("assignment: entries must be 0 or 1");
}

std::pair<Int, Int> eval_knapsack(const KnapsackInstance& inst, const Assignment& x) {
  check_dimension(inst.size(), x);
  Int weight = 0;
  Int profit = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (x.bits[i]) {
      weight += inst.weights[i];
      profit += inst.profits[i];
    }
  }
  return {weight, profit};
}

bool is_feasible(const KnapsackInstance& inst, const Assignment& x) {
  check_dimension(inst.size(), x);
  Int weight = 0;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (x.bits[i]) weight += inst.weights[i];
  return weight == inst.bound;
}

Int eval_ssg(const SubsetSumGoalInstance& inst, const Assignment& x) {
  check_dimension(inst.size(), x);
  Int sum = 0;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (x.bits[i]) sum += inst.weights[i];
  sum -= inst.goal;
  return abs(sum);
}

Int eval_rank1(const Rank1QuadraticProgram& prog, const Assignment& x) {
  check_dimension(prog.dimension(), x);
  Int a = 0;
  Int b = 0;
  for (std::size_t i = 0; i < prog.dimension(); ++i) {
    if (x.bits[i]) {
      a += prog.u.coeffs[i];
      b += prog.v.coeffs[i];
    }
  }
  return a * b;
}

Int eval_quadratic(const QuadraticProgram& prog, const Assignment& x) {
  check_dimension(prog.dimension(), x);
  Int value = 0;
  for (std::size_t i = 0; i < prog.dimension(); ++i) {
    if (!x.bits[i]) continue;
    const auto& row = prog.matrix[i];
    for (std::size_t j = 0; j < prog.dimension(); ++j)
      if (x.bits[j]) value += row[j];
  }
  return value;
}

QuadraticProgram rank1_to_matrix(const Rank1QuadraticProgram& prog) {
  const std::size_t n = prog.dimension();
  QuadraticProgram out;
  out.matrix.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.matrix[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      out.matrix[i].push_back(prog.u.coeffs[i] * prog.v.coeffs[j]);
  }
  return out;
}

Rat eval_hyperbolic(const HyperbolicProgram& prog, const Assignment& x) {
  Int num = eval_linear(prog.numerator, x);
  Int den = eval_linear(prog.denominator, x);
  return make_rat(num, den);
}

Int coefficient_sum(const QuadraticProgram& prog) {
  Int total = 0;
  for (const auto& row : prog.matrix)
    for (const Int& entry : row) total += abs(entry);
  return total;
}

Int coefficient_sum(const HyperbolicProgram& prog) {
  Int total = abs(prog.numerator.constant) + abs(prog.denominator.constant);
  total += abs_sum(prog.numerator.coeffs);
  total += abs_sum(prog.denominator.coeffs);
  return total;
}

}  // namespace uniq01
