#include "uniq01/reductions.hpp"

#include <algorithm>

#include "uniq01/errors.hpp"

namespace uniq01 {

namespace {

// Any subset with w(I) == W, scanned over all 2^n subsets with running sums.
bool has_feasible_subset(const KnapsackInstance& inst) {
  const std::size_t n = inst.size();
  Int weight = 0;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (found) return;
    if (d == n) {
      if (weight == inst.bound) found = true;
      return;
    }
    self(self, d + 1);
    if (found) return;
    weight += inst.weights[d];
    self(self, d + 1);
    weight -= inst.weights[d];
  };
  rec(rec, 0);
  return found;
}

}  // namespace

SolutionMap reversed(const SolutionMap& map) {
  SolutionMap out;
  out.direction = map.direction == MapDirection::forward ? MapDirection::backward
                                                         : MapDirection::forward;
  switch (map.rule) {
    case MapRule::identity_on_items:
      out.rule = MapRule::identity_on_items;
      break;
    case MapRule::add_auxiliary_variable_set_to_1:
      out.rule = MapRule::drop_auxiliary_variable;
      break;
    case MapRule::drop_auxiliary_variable:
      out.rule = MapRule::add_auxiliary_variable_set_to_1;
      break;
  }
  return out;
}

Assignment map_optimizer(const SolutionMap& map, const Assignment& x) {
  switch (map.rule) {
    case MapRule::identity_on_items:
      return x;
    case MapRule::add_auxiliary_variable_set_to_1: {
      Assignment out = x;
      out.bits.push_back(1);
      return out;
    }
    case MapRule::drop_auxiliary_variable: {
      if (x.size() == 0 || x.bits.back() != 1) throw NotAnOptimizerShape();
      Assignment out = x;
      out.bits.pop_back();
      return out;
    }
  }
  throw Error("unreachable map rule");
}

KnapsackInstance normalize_profit(const KnapsackInstance& inst) {
  if (sgn(inst.total_profit()) > 0) return inst;
  KnapsackInstance out = inst;
  out.weights.emplace_back(0);
  out.profits.emplace_back(1);
  return out;
}

KnapsackInstance pad_feasible(const KnapsackInstance& inst, std::size_t limit) {
  if (inst.size() <= limit && has_feasible_subset(inst)) return inst;
  KnapsackInstance out = inst;
  out.weights.push_back(inst.bound);
  out.profits.emplace_back(0);
  return out;
}

SubsetSumGoalInstance knapsack_to_ssg(const KnapsackInstance& inst) {
  Int total_profit = inst.total_profit();
  if (sgn(total_profit) == 0) throw ProfitSumZero();
  SubsetSumGoalInstance out;
  out.weights.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    out.weights.push_back(3 * inst.weights[i] * total_profit + inst.profits[i]);
  out.goal = (3 * inst.bound + 1) * total_profit;
  return out;
}

Rank1QuadraticProgram ssg_to_rank1(const SubsetSumGoalInstance& inst) {
  if (sgn(inst.goal) == 0) throw GoalZero();
  Rank1QuadraticProgram out;
  out.u.constant = 0;
  out.v.constant = 0;
  out.u.coeffs = inst.weights;
  out.v.coeffs = inst.weights;
  out.u.coeffs.push_back(-3 * inst.goal);
  out.v.coeffs.push_back(inst.goal);
  return out;
}

HyperbolicProgram knapsack_to_hyperbolic(const KnapsackInstance& inst, std::size_t limit) {
  Int total_profit = inst.total_profit();
  if (sgn(total_profit) == 0) throw ProfitSumZero();
  if (inst.size() <= limit && !has_feasible_subset(inst)) throw InfeasibleInstance();
  HyperbolicProgram out;
  out.numerator.constant = 2;
  out.numerator.coeffs = inst.profits;
  out.denominator.constant = 1 + 2 * total_profit * inst.bound;
  out.denominator.coeffs.reserve(inst.size());
  for (const Int& w : inst.weights) out.denominator.coeffs.push_back(-2 * total_profit * w);
  return out;
}

std::vector<Assignment> enumerate_optimizers(const Objective& obj, std::size_t limit) {
  const std::size_t n = dimension(obj);
  if (n > limit) throw TooLarge(n, limit);
  if (n >= 64) throw TooLarge(n, 63);
  const bool maximize = is_maximization(obj);

  std::vector<Assignment> best;
  std::optional<Rat> best_value;
  Assignment x = Assignment::zeros(n);
  for (std::uint64_t mask = 0;; ++mask) {
    if (is_objective_feasible(obj, x)) {
      Rat value = objective_value(obj, x);
      if (!best_value || (maximize ? value > *best_value : value < *best_value)) {
        best_value = value;
        best.clear();
        best.push_back(x);
      } else if (value == *best_value) {
        best.push_back(x);
      }
    }
    if (mask + 1 == (std::uint64_t{1} << n)) break;
    // binary increment from the right keeps lexicographic order
    for (std::size_t i = n; i-- > 0;) {
      if (x.bits[i] == 0) {
        x.bits[i] = 1;
        break;
      }
      x.bits[i] = 0;
    }
  }
  return best;
}

BijectionReport verify_bijection(const Objective& source, const Objective& target,
                                 const SolutionMap& map, std::size_t limit) {
  std::vector<Assignment> left = enumerate_optimizers(source, limit);
  std::vector<Assignment> right = enumerate_optimizers(target, limit);

  BijectionReport report;
  report.left_count = static_cast<unsigned long>(left.size());
  report.right_count = static_cast<unsigned long>(right.size());

  // Both lists are lex-sorted, so membership is a binary search. The map
  // rules are injective, so equal counts plus image containment give a
  // bijection.
  for (const Assignment& s : left) {
    Assignment image = map_optimizer(map, s);
    if (!std::binary_search(right.begin(), right.end(), image)) {
      report.matched = false;
      report.counterexample_source = s;
      report.counterexample_target = image;
      return report;
    }
  }
  if (left.size() != right.size()) {
    report.matched = false;
    // lexicographically smallest target optimizer with no mapped preimage
    std::vector<Assignment> images;
    images.reserve(left.size());
    for (const Assignment& s : left) images.push_back(map_optimizer(map, s));
    std::sort(images.begin(), images.end());
    for (const Assignment& t : right) {
      if (!std::binary_search(images.begin(), images.end(), t)) {
        report.counterexample_target = t;
        break;
      }
    }
    return report;
  }
  report.matched = true;
  return report;
}

}  // namespace uniq01
