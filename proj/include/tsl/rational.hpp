#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tsl {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<IntegerVector>;

/// Canonical rendering: "num/den" when den > 1, otherwise "num"; always reduced.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", with optional sign. Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

bool is_zero(std::span<const Rational> v);
bool is_integral(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

RationalVector scaled(std::span<const Rational> v, const Rational& factor);
RationalVector add(std::span<const Rational> a, std::span<const Rational> b);
RationalVector subtract(std::span<const Rational> a, std::span<const Rational> b);

RationalVector to_rational(std::span<const Integer> v);
RationalVector to_rational(std::span<const std::int64_t> v);

/// Smallest positive integer multiple of v that is integral, divided by the gcd of its
/// entries. The zero vector maps to the zero vector.
IntegerVector primitive_integer_multiple(std::span<const Rational> v);

/// Divides by the gcd of all entries (keeps sign). Zero vectors are returned unchanged.
IntegerVector make_primitive(IntegerVector v);

Integer gcd_of(std::span<const Integer> v);

/// Checked narrowing for the enumeration fast path.
std::int64_t to_int64(const Integer& z);

}  // namespace tsl
