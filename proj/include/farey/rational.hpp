#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace farey {

using Rational = mpq_class;
using BigInt = mpz_class;

// Canonical p/q with q > 0.
Rational rat(std::int64_t p, std::int64_t q = 1);

// Always "p/q" in lowest terms, q > 0, including q = 1.
std::string format_rational(const Rational& r);

// Accepts "p/q", "p", or a plain decimal such as "0.55" (no exponent).
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

std::int64_t to_int64(const BigInt& z);
bool fits_int64(const BigInt& z);

double to_double(const Rational& r);

// 12 significant digits, the fixed decimal format of all emitters.
std::string format_decimal(double x);

}  // namespace farey
