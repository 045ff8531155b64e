#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace permclass {

// Exact rational scalar, always in canonical reduced form with a positive
// denominator.
using Rational = mpq_class;

// Accepts integers ("12", "-7"), fractions ("3/4", "-5/10") and decimals
// ("2.5", ".25", "-0.125"). Throws BadEntry on anything else.
Rational parse_rational(std::string_view token);

// Integers print bare, everything else as "p/q".
std::string format_rational(const Rational& value);

}  // namespace permclass
