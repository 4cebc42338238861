#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzv {

/// Exact arbitrary-precision rational, canonicalized after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", e.g. "4/1", "-1/2".
std::string to_fraction_string(const Rational& r);

/// Shortest form: "4", "-1/2".
std::string to_display_string(const Rational& r);

/// Accepts "n", "n/d" and optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

}  // namespace mzv
