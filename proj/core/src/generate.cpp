#include "uniq01/generate.hpp"

#include <stdexcept>

namespace uniq01 {

namespace {

// per-kind seed salt so the same seed gives unrelated streams per family
constexpr std::uint64_t kKindSalt[] = {
    0x6b6e61707361636bULL,  // knapsack
    0x7375627365740a51ULL,  // subset_sum_goal
    0x72616e6b31717561ULL,  // rank1_quadratic
    0x7175616472617469ULL,  // quadratic
    0x6879706572626f6cULL,  // hyperbolic
};

}  // namespace

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::knapsack:
      return "knapsack";
    case InstanceKind::subset_sum_goal:
      return "subset_sum_goal";
    case InstanceKind::rank1_quadratic:
      return "rank1_quadratic";
    case InstanceKind::quadratic:
      return "quadratic";
    case InstanceKind::hyperbolic:
      return "hyperbolic";
  }
  return "?";
}

std::optional<InstanceKind> kind_from_name(std::string_view name) {
  if (name == "knapsack") return InstanceKind::knapsack;
  if (name == "subset_sum_goal" || name == "ssg") return InstanceKind::subset_sum_goal;
  if (name == "rank1_quadratic" || name == "rank1") return InstanceKind::rank1_quadratic;
  if (name == "quadratic") return InstanceKind::quadratic;
  if (name == "hyperbolic") return InstanceKind::hyperbolic;
  return std::nullopt;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound_inclusive) {
  if (bound_inclusive == ~std::uint64_t{0}) return next();
  const std::uint64_t span = bound_inclusive + 1;
  std::uint64_t x, r;
  do {
    x = next();
    r = x % span;
  } while (x - r > std::uint64_t{0} - span);
  return r;
}

Int SplitMix64::next_int(const Int& bound_inclusive) {
  if (sgn(bound_inclusive) < 0) throw std::invalid_argument("next_int: negative bound");
  if (bound_inclusive.fits_ulong_p())
    return Int(static_cast<unsigned long>(next_below(bound_inclusive.get_ui())));

  const std::size_t bits = mpz_sizeinbase(bound_inclusive.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  Int mask = (Int(1) << bits) - 1;
  for (;;) {
    Int value = 0;
    for (std::size_t w = 0; w < words; ++w) {
      value <<= 64;
      value += Int(static_cast<unsigned long>(next()));
    }
    value &= mask;
    if (value <= bound_inclusive) return value;
  }
}

Int SplitMix64::next_signed(const Int& bound) {
  return next_int(2 * bound) - bound;
}

KnapsackInstance gen_knapsack(std::size_t n, const Int& coeff_bound, std::uint64_t seed) {
  SplitMix64 rng(seed ^ kKindSalt[0]);
  KnapsackInstance inst;
  inst.weights.reserve(n);
  inst.profits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) inst.weights.push_back(rng.next_int(coeff_bound));
  for (std::size_t i = 0; i < n; ++i) inst.profits.push_back(rng.next_int(coeff_bound));
  inst.bound = rng.next_int(inst.total_weight());
  return inst;
}

SubsetSumGoalInstance gen_ssg(std::size_t n, const Int& coeff_bound, std::uint64_t seed) {
  SplitMix64 rng(seed ^ kKindSalt[1]);
  SubsetSumGoalInstance inst;
  inst.weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) inst.weights.push_back(rng.next_int(coeff_bound));
  inst.goal = rng.next_int(inst.total_weight());
  return inst;
}

Rank1QuadraticProgram gen_rank1(std::size_t n, const Int& coeff_bound, std::uint64_t seed) {
  SplitMix64 rng(seed ^ kKindSalt[2]);
  Rank1QuadraticProgram prog;
  prog.u.constant = 0;
  prog.v.constant = 0;
  prog.u.coeffs.reserve(n);
  prog.v.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) prog.u.coeffs.push_back(rng.next_signed(coeff_bound));
  for (std::size_t i = 0; i < n; ++i) prog.v.coeffs.push_back(rng.next_signed(coeff_bound));
  return prog;
}

QuadraticProgram gen_quadratic(std::size_t n, const Int& coeff_bound, std::uint64_t seed) {
  SplitMix64 rng(seed ^ kKindSalt[3]);
  QuadraticProgram prog;
  prog.matrix.resize(n);
  for (auto& row : prog.matrix) {
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(rng.next_signed(coeff_bound));
  }
  return prog;
}

HyperbolicProgram gen_hyperbolic(std::size_t n, const Int& coeff_bound, std::uint64_t seed) {
  SplitMix64 rng(seed ^ kKindSalt[4]);
  HyperbolicProgram prog;
  prog.numerator.constant = rng.next_signed(coeff_bound);
  prog.numerator.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) prog.numerator.coeffs.push_back(rng.next_signed(coeff_bound));
  prog.denominator.constant = rng.next_signed(coeff_bound);
  prog.denominator.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    prog.denominator.coeffs.push_back(rng.next_signed(coeff_bound));
  return prog;
}

AnyInstance generate_instance(InstanceKind kind, std::size_t n, const Int& coeff_bound,
                              std::uint64_t seed) {
  switch (kind) {
    case InstanceKind::knapsack:
      return gen_knapsack(n, coeff_bound, seed);
    case InstanceKind::subset_sum_goal:
      return gen_ssg(n, coeff_bound, seed);
    case InstanceKind::rank1_quadratic:
      return gen_rank1(n, coeff_bound, seed);
    case InstanceKind::quadratic:
      return gen_quadratic(n, coeff_bound, seed);
    case InstanceKind::hyperbolic:
      return gen_hyperbolic(n, coeff_bound, seed);
  }
  throw std::invalid_argument("unknown instance kind");
}

}  // namespace uniq01
