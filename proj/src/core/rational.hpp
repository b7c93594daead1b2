#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace llab {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p" or "p/q" with an optional leading sign; result is canonical.
Rational parse_rational(std::string_view text);

Integer falling_factorial(unsigned n, unsigned k);
Integer binomial(unsigned n, unsigned k);

}  // namespace llab
