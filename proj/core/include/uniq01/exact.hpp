#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace uniq01 {

/// Arbitrary-precision integer. All objective arithmetic in this library is
/// exact; no floating point is used anywhere.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept reduced with positive
/// denominator (an integer is the den == 1 case).
using Rat = mpq_class;

/// Builds a canonical rational. Throws ZeroDenominator when den == 0.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& v);

std::string to_decimal(const Int& value);

/// Strict base-10 parse: optional leading '-', then one or more digits.
/// Throws ParseError on anything else.
Int int_from_decimal(std::string_view text);

/// Quotient rounded toward -infinity. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Quotient rounded toward +infinity. b must be nonzero.
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& v);
Int ceil_rat(const Rat& v);

/// ceil(log2(m)) for m >= 1.
unsigned long ceil_log2(const Int& m);

}  // namespace uniq01
