#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace comblab {

// Arbitrary precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator as long as it is built through the
// helpers below (or GMP arithmetic on canonical operands).
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", or "p" when q == 1.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

// Accepts "p", "-p", "p/q". Throws UsageError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// 2^-k as an exact rational.
Rational pow2_inverse(unsigned k);

}  // namespace comblab
