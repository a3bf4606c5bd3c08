#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace socialchoice {

// Exact arithmetic everywhere: winner sets and dominance hinge on exact
// ties (>= vs >), which floating point cannot represent reliably.
using Rational = mpq_class;

// Parses "3", "4/11" or "-2/7". Throws std::invalid_argument on anything
// else (including zero denominators).
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// Exact promotion of a binary double; no rounding involved.
Rational rational_from_double(double value);

}  // namespace socialchoice
