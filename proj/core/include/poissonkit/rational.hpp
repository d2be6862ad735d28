#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace poissonkit {

/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(const Vector& v);

}  // namespace poissonkit
