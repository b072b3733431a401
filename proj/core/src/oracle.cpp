#include "uniq01/oracle.hpp"

#include <stdexcept>

#include "uniq01/errors.hpp"

namespace uniq01 {

namespace {

// One depth-first pass over all 2^n assignments, branch 0 before branch 1,
// which visits leaves in lexicographic order on (x_1..x_n). The scanners
// keep running sums so a leaf costs O(1) big-int work (O(depth) for the
// quadratic matrix). Visitors return true to stop the scan; the first
// qualifying leaf is therefore the lexicographically smallest witness.

struct ScanStats {
  std::uint64_t examined = 0;
  bool feasible_seen = false;
};

template <class Visit>
void scan_knapsack(const KnapsackInstance& inst, ScanStats& s, Visit&& visit) {
  const std::size_t n = inst.size();
  std::vector<std::uint8_t> bits(n, 0);
  Int weight = 0;
  Int profit = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      ++s.examined;
      if (weight != inst.bound) return;
      s.feasible_seen = true;
      stop = visit(bits, profit);
      return;
    }
    self(self, d + 1);
    if (stop) return;
    bits[d] = 1;
    weight += inst.weights[d];
    profit += inst.profits[d];
    self(self, d + 1);
    bits[d] = 0;
    weight -= inst.weights[d];
    profit -= inst.profits[d];
  };
  rec(rec, 0);
}

template <class Visit>
void scan_ssg(const SubsetSumGoalInstance& inst, ScanStats& s, Visit&& visit) {
  const std::size_t n = inst.size();
  std::vector<std::uint8_t> bits(n, 0);
  Int sum = 0;
  Int value;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      ++s.examined;
      s.feasible_seen = true;
      mpz_sub(value.get_mpz_t(), sum.get_mpz_t(), inst.goal.get_mpz_t());
      mpz_abs(value.get_mpz_t(), value.get_mpz_t());
      stop = visit(bits, value);
      return;
    }
    self(self, d + 1);
    if (stop) return;
    bits[d] = 1;
    sum += inst.weights[d];
    self(self, d + 1);
    bits[d] = 0;
    sum -= inst.weights[d];
  };
  rec(rec, 0);
}

template <class Visit>
void scan_rank1(const Rank1QuadraticProgram& prog, ScanStats& s, Visit&& visit) {
  const std::size_t n = prog.dimension();
  std::vector<std::uint8_t> bits(n, 0);
  Int a = 0;
  Int b = 0;
  Int value;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      ++s.examined;
      s.feasible_seen = true;
      mpz_mul(value.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      stop = visit(bits, value);
      return;
    }
    self(self, d + 1);
    if (stop) return;
    bits[d] = 1;
    a += prog.u.coeffs[d];
    b += prog.v.coeffs[d];
    self(self, d + 1);
    bits[d] = 0;
    a -= prog.u.coeffs[d];
    b -= prog.v.coeffs[d];
  };
  rec(rec, 0);
}

template <class Visit>
void scan_quadratic(const QuadraticProgram& prog, ScanStats& s, Visit&& visit) {
  const std::size_t n = prog.dimension();
  std::vector<std::uint8_t> bits(n, 0);
  std::vector<std::size_t> active;
  active.reserve(n);
  std::vector<Int> delta(n);  // delta[k]: value added when the k-th active bit was set
  Int value = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      ++s.examined;
      s.feasible_seen = true;
      stop = visit(bits, value);
      return;
    }
    self(self, d + 1);
    if (stop) return;
    Int& dl = delta[active.size()];
    dl = prog.matrix[d][d];
    for (std::size_t j : active) {
      dl += prog.matrix[d][j];
      dl += prog.matrix[j][d];
    }
    value += dl;
    active.push_back(d);
    bits[d] = 1;
    self(self, d + 1);
    bits[d] = 0;
    active.pop_back();
    value -= dl;
  };
  rec(rec, 0);
}

// Visitor receives (bits, num, den) with den != 0; leaves with zero
// denominator are counted as examined but never shown.
template <class Visit>
void scan_hyperbolic(const HyperbolicProgram& prog, ScanStats& s, Visit&& visit) {
  const std::size_t n = prog.dimension();
  std::vector<std::uint8_t> bits(n, 0);
  Int num = prog.numerator.constant;
  Int den = prog.denominator.constant;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == n) {
      ++s.examined;
      if (sgn(den) == 0) return;
      s.feasible_seen = true;
      stop = visit(bits, num, den);
      return;
    }
    self(self, d + 1);
    if (stop) return;
    bits[d] = 1;
    num += prog.numerator.coeffs[d];
    den += prog.denominator.coeffs[d];
    self(self, d + 1);
    bits[d] = 0;
    num -= prog.numerator.coeffs[d];
    den -= prog.denominator.coeffs[d];
  };
  rec(rec, 0);
}

Int abs_sum(const std::vector<Int>& values) {
  Int total = 0;
  for (const Int& v : values) total += abs(v);
  return total;
}

// Exact comparisons against a rational threshold t = tn/td (td > 0).
struct ThresholdCompare {
  const Int tn;
  const Int td;
  mutable Int lhs;
  mutable Int rhs;

  explicit ThresholdCompare(const Rat& t) : tn(t.get_num()), td(t.get_den()) {}

  bool int_at_least(const Int& value) const {
    if (td == 1) return value >= tn;
    mpz_mul(lhs.get_mpz_t(), value.get_mpz_t(), td.get_mpz_t());
    return lhs >= tn;
  }

  bool int_equals(const Int& value) const {
    if (td == 1) return value == tn;
    return false;  // an integer never equals a non-integer rational
  }

  // value num/den >= tn/td, den of either sign (den != 0)
  bool frac_at_least(const Int& num, const Int& den) const {
    mpz_mul(lhs.get_mpz_t(), num.get_mpz_t(), td.get_mpz_t());
    mpz_mul(rhs.get_mpz_t(), tn.get_mpz_t(), den.get_mpz_t());
    int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
    return sgn(den) > 0 ? c >= 0 : c <= 0;
  }

  bool frac_equals(const Int& num, const Int& den) const {
    mpz_mul(lhs.get_mpz_t(), num.get_mpz_t(), td.get_mpz_t());
    mpz_mul(rhs.get_mpz_t(), tn.get_mpz_t(), den.get_mpz_t());
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t()) == 0;
  }
};

}  // namespace

OracleStats operator-(const OracleStats& after, const OracleStats& before) {
  return OracleStats{after.threshold_queries - before.threshold_queries,
                     after.witness_queries - before.witness_queries,
                     after.assignments_examined - before.assignments_examined};
}

std::size_t dimension(const Objective& obj) {
  return std::visit(
      [](const auto& fam) -> std::size_t {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MinimizeQuadratic>) {
          return std::visit([](const auto& p) { return p.dimension(); }, fam.program);
        } else if constexpr (std::is_same_v<T, MaximizeHyperbolic>) {
          return fam.program.dimension();
        } else {
          return fam.instance.size();
        }
      },
      obj);
}

bool is_maximization(const Objective& obj) {
  return std::holds_alternative<MaximizeHyperbolic>(obj) ||
         std::holds_alternative<MaximizeKnapsackProfit>(obj);
}

bool integer_valued(const Objective& obj) {
  return !std::holds_alternative<MaximizeHyperbolic>(obj);
}

bool is_objective_feasible(const Objective& obj, const Assignment& x) {
  if (const auto* k = std::get_if<MaximizeKnapsackProfit>(&obj))
    return is_feasible(k->instance, x);
  if (const auto* h = std::get_if<MaximizeHyperbolic>(&obj))
    return sgn(eval_linear(h->program.denominator, x)) != 0;
  return x.size() == dimension(obj);
}

Rat objective_value(const Objective& obj, const Assignment& x) {
  return std::visit(
      [&](const auto& fam) -> Rat {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MinimizeQuadratic>) {
          if (const auto* q = std::get_if<QuadraticProgram>(&fam.program))
            return Rat(eval_quadratic(*q, x));
          return Rat(eval_rank1(std::get<Rank1QuadraticProgram>(fam.program), x));
        } else if constexpr (std::is_same_v<T, MaximizeHyperbolic>) {
          return eval_hyperbolic(fam.program, x);
        } else if constexpr (std::is_same_v<T, MaximizeKnapsackProfit>) {
          return Rat(eval_knapsack(fam.instance, x).second);
        } else {
          return Rat(eval_ssg(fam.instance, x));
        }
      },
      obj);
}

Int magnitude_bound(const Objective& obj) {
  return std::visit(
      [](const auto& fam) -> Int {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MinimizeQuadratic>) {
          if (const auto* q = std::get_if<QuadraticProgram>(&fam.program))
            return coefficient_sum(*q);
          const auto& r = std::get<Rank1QuadraticProgram>(fam.program);
          return abs_sum(r.u.coeffs) * abs_sum(r.v.coeffs);
        } else if constexpr (std::is_same_v<T, MaximizeHyperbolic>) {
          return coefficient_sum(fam.program);
        } else if constexpr (std::is_same_v<T, MaximizeKnapsackProfit>) {
          return fam.instance.total_weight() + fam.instance.total_profit() +
                 fam.instance.bound;
        } else {
          return fam.instance.total_weight() + fam.instance.goal;
        }
      },
      obj);
}

void EnumerationOracle::check_dimension(const Objective& obj) const {
  std::size_t n = uniq01::dimension(obj);
  if (n > max_dimension_) throw TooLarge(n, max_dimension_);
}

std::optional<Assignment> EnumerationOracle::exists_at_most(const Objective& obj,
                                                            const Int& c) {
  check_dimension(obj);
  if (is_maximization(obj))
    throw std::invalid_argument("exists_at_most requires a minimizing objective");
  threshold_queries_.fetch_add(1, std::memory_order_relaxed);

  ScanStats s;
  std::optional<Assignment> witness;
  auto take = [&](const std::vector<std::uint8_t>& bits, const Int& value) {
    if (value <= c) {
      witness = Assignment(bits);
      return true;
    }
    return false;
  };
  if (const auto* q = std::get_if<MinimizeQuadratic>(&obj)) {
    if (const auto* qp = std::get_if<QuadraticProgram>(&q->program))
      scan_quadratic(*qp, s, take);
    else
      scan_rank1(std::get<Rank1QuadraticProgram>(q->program), s, take);
  } else {
    scan_ssg(std::get<MinimizeSsg>(obj).instance, s, take);
  }
  assignments_examined_.fetch_add(s.examined, std::memory_order_relaxed);
  return witness;
}

std::optional<Assignment> EnumerationOracle::exists_at_least(const Objective& obj,
                                                             const Rat& t) {
  check_dimension(obj);
  if (!is_maximization(obj))
    throw std::invalid_argument("exists_at_least requires a maximizing objective");
  threshold_queries_.fetch_add(1, std::memory_order_relaxed);

  ScanStats s;
  std::optional<Assignment> witness;
  ThresholdCompare cmp(t);
  if (const auto* k = std::get_if<MaximizeKnapsackProfit>(&obj)) {
    scan_knapsack(k->instance, s, [&](const std::vector<std::uint8_t>& bits, const Int& profit) {
      if (cmp.int_at_least(profit)) {
        witness = Assignment(bits);
        return true;
      }
      return false;
    });
  } else {
    scan_hyperbolic(std::get<MaximizeHyperbolic>(obj).program, s,
                    [&](const std::vector<std::uint8_t>& bits, const Int& num, const Int& den) {
                      if (cmp.frac_at_least(num, den)) {
                        witness = Assignment(bits);
                        return true;
                      }
                      return false;
                    });
  }
  assignments_examined_.fetch_add(s.examined, std::memory_order_relaxed);
  if (!witness && !s.feasible_seen) throw NoFeasiblePoint();
  return witness;
}

std::optional<std::pair<Assignment, Assignment>> EnumerationOracle::two_optima_at(
    const Objective& obj, const Rat& v) {
  check_dimension(obj);
  witness_queries_.fetch_add(1, std::memory_order_relaxed);

  ScanStats s;
  std::vector<Assignment> found;
  ThresholdCompare cmp(v);
  auto take_int = [&](const std::vector<std::uint8_t>& bits, const Int& value) {
    if (cmp.int_equals(value)) found.emplace_back(bits);
    return found.size() == 2;
  };
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MinimizeQuadratic>) {
          if (const auto* qp = std::get_if<QuadraticProgram>(&fam.program))
            scan_quadratic(*qp, s, take_int);
          else
            scan_rank1(std::get<Rank1QuadraticProgram>(fam.program), s, take_int);
        } else if constexpr (std::is_same_v<T, MaximizeKnapsackProfit>) {
          scan_knapsack(fam.instance, s, take_int);
        } else if constexpr (std::is_same_v<T, MinimizeSsg>) {
          scan_ssg(fam.instance, s, take_int);
        } else {
          scan_hyperbolic(fam.program, s,
                          [&](const std::vector<std::uint8_t>& bits, const Int& num,
                              const Int& den) {
                            if (cmp.frac_equals(num, den)) found.emplace_back(bits);
                            return found.size() == 2;
                          });
        }
      },
      obj);
  assignments_examined_.fetch_add(s.examined, std::memory_order_relaxed);
  if (found.size() < 2) return std::nullopt;
  return std::make_pair(std::move(found[0]), std::move(found[1]));
}

std::uint64_t EnumerationOracle::count_optima(const Objective& obj, const Rat& v,
                                              std::uint64_t cap) {
  check_dimension(obj);
  witness_queries_.fetch_add(1, std::memory_order_relaxed);
  if (cap == 0) return 0;

  ScanStats s;
  std::uint64_t count = 0;
  ThresholdCompare cmp(v);
  auto take_int = [&](const std::vector<std::uint8_t>&, const Int& value) {
    if (cmp.int_equals(value)) ++count;
    return count == cap;
  };
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MinimizeQuadratic>) {
          if (const auto* qp = std::get_if<QuadraticProgram>(&fam.program))
            scan_quadratic(*qp, s, take_int);
          else
            scan_rank1(std::get<Rank1QuadraticProgram>(fam.program), s, take_int);
        } else if constexpr (std::is_same_v<T, MaximizeKnapsackProfit>) {
          scan_knapsack(fam.instance, s, take_int);
        } else if constexpr (std::is_same_v<T, MinimizeSsg>) {
          scan_ssg(fam.instance, s, take_int);
        } else {
          scan_hyperbolic(fam.program, s,
                          [&](const std::vector<std::uint8_t>&, const Int& num, const Int& den) {
                            if (cmp.frac_equals(num, den)) ++count;
                            return count == cap;
                          });
        }
      },
      obj);
  assignments_examined_.fetch_add(s.examined, std::memory_order_relaxed);
  return count;
}

OracleStats EnumerationOracle::stats() const {
  return OracleStats{threshold_queries_.load(std::memory_order_relaxed),
                     witness_queries_.load(std::memory_order_relaxed),
                     assignments_examined_.load(std::memory_order_relaxed)};
}

}  // namespace uniq01
