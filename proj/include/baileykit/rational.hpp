#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace baileykit {

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace baileykit
