#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cag {

/// Exact rational number. All circle coordinates and interval endpoints in
/// the library are held as GMP rationals in canonical (reduced) form.
using Rational = mpq_class;

/// num/den in canonical form. mpq_class(num, den) skips the reduction, and
/// GMP comparisons assume reduced operands.
Rational ratio(long num, long den);

/// Reduces `value` into [0, 1).
Rational mod_one(const Rational& value);

/// Floor of a rational as a signed integer (values here are always small).
long floor_to_long(const Rational& value);

/// Formats as "p/q" with q > 0 and gcd(p, q) = 1; integers come out as "k/1".
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q", "-p/q" or a bare integer "k". Throws Error(ParseError).
Rational parse_fraction(std::string_view text);

}  // namespace cag
