#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace epvote {

// Exact rational carrier for all vote quantities. GMP keeps values in
// canonical reduced form (positive denominator) through arithmetic.
using Rational = mpq_class;

// Accepts an integer ("21"), a fraction ("115/4", "-3/4"), or a decimal
// ("28.75"); decimals are converted exactly. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

Rational floor_rational(const Rational& x);
Rational ceil_rational(const Rational& x);

// floor(x) as a plain long; throws BadRange if it does not fit.
long floor_to_long(const Rational& x);

// "p/q", or just "p" when the denominator is 1.
std::string format_exact(const Rational& x);

// Fixed-point decimal with `places` fractional digits, rounded half away
// from zero.
std::string format_decimal(const Rational& x, int places);

// Decimal with at most `digits` significant digits, plain notation,
// trailing fractional zeros stripped.
std::string format_significant(const Rational& x, int digits);

// "p/q (d.dddddd)" — the human-facing rendering used by the CLI.
std::string format_human(const Rational& x);

}  // namespace epvote
