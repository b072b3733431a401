#include "uniq01/decider.hpp"

#include <stdexcept>
#include <utility>

#include "uniq01/errors.hpp"

namespace uniq01 {

namespace {

struct Phase1Outcome {
  Rat optimum;
  Assignment witness;
};

// Binary search over an integer bracket [lo, hi] with lo <= c* <= hi,
// mid = floor((lo+hi)/2). A success at mid shrinks hi and stores the
// witness; at termination the stored witness attains c* exactly (its value
// lies between c* and the hi of its query). The quadratic families always
// succeed at the first midpoint 0 because the all-zeros point has value 0;
// the subset-sum family can end witness-less when c* == hi, so one recovery
// query re-asks at c*.
Phase1Outcome search_min(const Objective& obj, EnumerationOracle& oracle, Int lo, Int hi) {
  std::optional<Assignment> witness;
  while (lo < hi) {
    Int mid = floor_div(lo + hi, 2);
    if (auto w = oracle.exists_at_most(obj, mid)) {
      hi = mid;
      witness = std::move(w);
    } else {
      lo = mid + 1;
    }
  }
  if (!witness) witness = oracle.exists_at_most(obj, lo);
  if (!witness) throw Error("internal: minimum search lost its witness");
  return {Rat(lo), std::move(*witness)};
}

// Ascending search on [0, P]. The initial probe at 0 accepts any feasible
// subset, so it doubles as the feasibility test; nullopt means no subset
// attains weight W.
std::optional<Phase1Outcome> search_max_knapsack(const Objective& obj,
                                                 EnumerationOracle& oracle) {
  const auto& inst = std::get<MaximizeKnapsackProfit>(obj).instance;
  if (sgn(magnitude_bound(obj)) == 0)
    return Phase1Outcome{Rat(0), Assignment::zeros(inst.size())};

  std::optional<Assignment> witness;
  try {
    witness = oracle.exists_at_least(obj, Rat(0));
  } catch (const NoFeasiblePoint&) {
    return std::nullopt;
  }
  Int lo = 0;
  Int hi = inst.total_profit();
  while (lo < hi) {
    Int mid = ceil_div(lo + hi, 2);
    if (auto w = oracle.exists_at_least(obj, Rat(mid))) {
      lo = mid;
      witness = std::move(w);
    } else {
      hi = mid - 1;
    }
  }
  return Phase1Outcome{Rat(lo), std::move(*witness)};
}

// Dyadic narrowing on [-S, S]. Feasible values are rationals with
// numerator and denominator magnitudes at most S, so distinct values are
// at least 1/S^2 apart and a bracket narrower than that pins the optimum
// down to the unique denominator-<=S rational in [lo, hi). nullopt means no
// assignment has a nonzero denominator.
std::optional<Phase1Outcome> search_max_hyperbolic(const Objective& obj,
                                                   EnumerationOracle& oracle) {
  Int bound = magnitude_bound(obj);
  if (sgn(bound) == 0) return std::nullopt;  // denominator is identically zero

  try {
    if (auto w = oracle.exists_at_least(obj, Rat(bound))) {
      Rat value = objective_value(obj, *w);
      return Phase1Outcome{std::move(value), std::move(*w)};
    }
  } catch (const NoFeasiblePoint&) {
    return std::nullopt;
  }
  std::optional<Assignment> witness = oracle.exists_at_least(obj, Rat(-bound));
  if (!witness) throw Error("internal: probe at -S must succeed on a feasible program");

  Rat lo(-bound);
  Rat hi(bound);
  Rat gap = make_rat(1, bound * bound);
  while (hi - lo >= gap) {
    Rat mid = (lo + hi) / 2;
    if (auto w = oracle.exists_at_least(obj, mid)) {
      lo = std::move(mid);
      witness = std::move(w);
    } else {
      hi = std::move(mid);
    }
  }
  return Phase1Outcome{simplest_rational_in(lo, hi), std::move(*witness)};
}

std::optional<Phase1Outcome> run_phase1(const Objective& obj, EnumerationOracle& oracle) {
  if (std::holds_alternative<MaximizeHyperbolic>(obj)) return search_max_hyperbolic(obj, oracle);
  if (std::holds_alternative<MaximizeKnapsackProfit>(obj)) return search_max_knapsack(obj, oracle);

  Int bound = magnitude_bound(obj);
  if (sgn(bound) == 0) return Phase1Outcome{Rat(0), Assignment::zeros(dimension(obj))};
  if (std::holds_alternative<MinimizeSsg>(obj))
    return search_min(obj, oracle, Int(0), bound);
  return search_min(obj, oracle, -bound, bound);
}

// simplest rational in an interval with explicit endpoint inclusion;
// hi_infinite marks intervals of the shape [lo, +inf) produced when a
// reciprocal step hits an excluded integer endpoint.
Rat simplest_in(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed,
                bool hi_infinite) {
  Int c = ceil_rat(lo);
  if (!lo_closed && Rat(c) == lo) c += 1;
  if (hi_infinite) return Rat(sgn(c) <= 0 ? Int(0) : c);

  Int r = floor_rat(hi);
  if (!hi_closed && Rat(r) == hi) r -= 1;
  if (c <= r) {
    if (sgn(c) <= 0 && sgn(r) >= 0) return Rat(0);
    return Rat(sgn(c) > 0 ? c : r);
  }

  // no integer inside: the interval sits within (k, k+1); descend through
  // x = k + 1/y, which reverses orientation and swaps the endpoint flags
  Int k = floor_rat(lo);
  Rat lo_frac = lo - Rat(k);
  Rat hi_frac = hi - Rat(k);
  bool sub_infinite = sgn(lo_frac) == 0;
  Rat ylo = Rat(1) / hi_frac;
  Rat yhi = sub_infinite ? Rat(0) : Rat(1) / lo_frac;
  Rat y = simplest_in(ylo, hi_closed, yhi, lo_closed, sub_infinite);
  return Rat(k) + Rat(1) / y;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::unique:
      return "unique";
    case Status::multiple:
      return "multiple";
    case Status::infeasible:
      return "infeasible";
  }
  return "?";
}

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_rational_in requires lo < hi");
  return simplest_in(lo, true, hi, false, false);
}

IntegerSearchOutcome solve_min_quadratic(const QuadraticProgram& prog,
                                         EnumerationOracle& oracle) {
  Objective obj{MinimizeQuadratic{prog}};
  OracleStats before = oracle.stats();
  Phase1Outcome out = *run_phase1(obj, oracle);
  return {out.optimum.get_num(), std::move(out.witness), oracle.stats() - before};
}

IntegerSearchOutcome solve_min_quadratic(const Rank1QuadraticProgram& prog,
                                         EnumerationOracle& oracle) {
  Objective obj{MinimizeQuadratic{prog}};
  OracleStats before = oracle.stats();
  Phase1Outcome out = *run_phase1(obj, oracle);
  return {out.optimum.get_num(), std::move(out.witness), oracle.stats() - before};
}

RationalSearchOutcome solve_max_hyperbolic(const HyperbolicProgram& prog,
                                           EnumerationOracle& oracle) {
  Objective obj{MaximizeHyperbolic{prog}};
  OracleStats before = oracle.stats();
  std::optional<Phase1Outcome> out = search_max_hyperbolic(obj, oracle);
  if (!out) throw NoFeasiblePoint();
  return {std::move(out->optimum), std::move(out->witness), oracle.stats() - before};
}

std::optional<RationalSearchOutcome> solve_optimum(const Objective& obj,
                                                   EnumerationOracle& oracle) {
  OracleStats before = oracle.stats();
  std::optional<Phase1Outcome> out = run_phase1(obj, oracle);
  if (!out) return std::nullopt;
  return RationalSearchOutcome{std::move(out->optimum), std::move(out->witness),
                               oracle.stats() - before};
}

UniquenessReport decide_unique(const Objective& obj, EnumerationOracle& oracle) {
  OracleStats before = oracle.stats();
  UniquenessReport report;
  report.method = "oracle";
  report.phase1 = std::holds_alternative<MaximizeHyperbolic>(obj) ? "dyadic-stern-brocot"
                                                                  : "integer-binary-search";

  std::optional<Phase1Outcome> phase1 = run_phase1(obj, oracle);
  if (!phase1) {
    report.status = Status::infeasible;
    report.stats = oracle.stats() - before;
    return report;
  }

  report.optimal_value = phase1->optimum;
  if (auto two = oracle.two_optima_at(obj, phase1->optimum)) {
    report.status = Status::multiple;
    report.witnesses = {std::move(two->first), std::move(two->second)};
  } else {
    report.status = Status::unique;
    report.witnesses = {std::move(phase1->witness)};
  }
  report.stats = oracle.stats() - before;
  return report;
}

UniquenessReport brute_force_unique(const Objective& obj, std::size_t limit) {
  const std::size_t n = dimension(obj);
  if (n > limit) throw TooLarge(n, limit);
  if (n >= 64) throw TooLarge(n, 63);
  const bool maximize = is_maximization(obj);

  UniquenessReport report;
  report.method = "brute";

  std::optional<Rat> best;
  std::vector<Assignment> witnesses;
  Assignment x = Assignment::zeros(n);
  for (std::uint64_t mask = 0;; ++mask) {
    if (is_objective_feasible(obj, x)) {
      Rat value = objective_value(obj, x);
      if (!best || (maximize ? value > *best : value < *best)) {
        best = std::move(value);
        witnesses.clear();
        witnesses.push_back(x);
      } else if (value == *best && witnesses.size() < 2) {
        witnesses.push_back(x);
      }
    }
    if (mask + 1 == (std::uint64_t{1} << n)) break;
    for (std::size_t i = n; i-- > 0;) {  // binary increment keeps lex order
      if (x.bits[i] == 0) {
        x.bits[i] = 1;
        break;
      }
      x.bits[i] = 0;
    }
  }

  if (!best) {
    report.status = Status::infeasible;
    return report;
  }
  report.optimal_value = std::move(*best);
  report.witnesses = std::move(witnesses);
  report.status = report.witnesses.size() == 1 ? Status::unique : Status::multiple;
  return report;
}

}  // namespace uniq01
