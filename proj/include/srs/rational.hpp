#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srs {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional leading minus) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);
bool is_integer(const Rational& q);

std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<std::int64_t> parse_integer_list(std::string_view text);

std::int64_t to_int64(const BigInt& z);
bool fits_int64(const BigInt& z);

int sign_of(const Rational& q);

using RationalPoint = std::vector<Rational>;

std::string format_point(std::span<const Rational> p);

}  // namespace srs
