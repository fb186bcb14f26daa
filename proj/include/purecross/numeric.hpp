#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace purecross {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or "-p/q" into a canonicalized rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

}  // namespace purecross
