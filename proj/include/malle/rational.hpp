#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace malle {

// Exact rationals are GMP's mpq_class; values are kept canonical after every operation.
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Always renders "p/q" (integers become "p/1") so the textual form round-trips bit-exactly.
std::string to_string(const Rational& r);

// Renders integers without the "/1" suffix. Used for human-facing tables only.
std::string to_display(const Rational& r);

Rational rational_min(const Rational& a, const Rational& b);
Rational rational_max(const Rational& a, const Rational& b);

}  // namespace malle
