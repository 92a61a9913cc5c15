#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace jetlie {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::optional<Rational> parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Rational pow(const Rational& base, long exponent);
// Exact d-th root when it exists in Q (negative bases allowed for odd d).
std::optional<Rational> exact_root(const Rational& q, unsigned long d);

std::size_t hash_value(const Rational& q);

}  // namespace jetlie
