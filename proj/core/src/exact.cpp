#include "uniq01/exact.hpp"

#include <cctype>

#include "uniq01/errors.hpp"

namespace uniq01 {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw ZeroDenominator();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& v) { return v.get_den() == 1; }

std::string to_decimal(const Int& value) { return value.get_str(10); }

Int int_from_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("bad integer literal '" + std::string(text) + "'");
  }
  return Int(std::string(text), 10);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_rat(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()));
  return q;
}

Int ceil_rat(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()));
  return q;
}

unsigned long ceil_log2(const Int& m) {
  if (sgn(m) <= 0) throw Error("ceil_log2 requires m >= 1");
  // sizeinbase(m, 2) == floor(log2 m) + 1; exact powers of two have a single set bit.
  std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  bool power_of_two = mpz_scan1(m.get_mpz_t(), 0) == bits - 1;
  return static_cast<unsigned long>(power_of_two ? bits - 1 : bits);
}

}  // namespace uniq01
