#include "tsl/rational.hpp"

#include <limits>

#include "tsl/error.hpp"

namespace tsl {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FitFailed: return "FitFailed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroSlope: return "ZeroSlope";
    case ErrorKind::ZeroChi: return "ZeroChi";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::ValidationFailed || kind == ErrorKind::InvariantViolation;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) fail(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return integer_from(text);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
    fail(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");
  }
  Integer d = integer_from(den);
  if (d == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

RationalVector scaled(std::span<const Rational> v, const Rational& factor) {
  RationalVector out(v.begin(), v.end());
  for (auto& x : out) x *= factor;
  return out;
}

RationalVector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
  RationalVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector difference of unequal lengths");
  RationalVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

RationalVector to_rational(std::span<const Integer> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto z : v) out.emplace_back(Integer(static_cast<long>(z)));
  return out;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& z : v) g = gcd(g, z);
  return g;
}

IntegerVector make_primitive(IntegerVector v) {
  Integer g = gcd_of(v);
  if (g == 0 || g == 1) return v;
  for (auto& z : v) z /= g;
  return v;
}

IntegerVector primitive_integer_multiple(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Rational s = q * Rational(l);
    out.push_back(s.get_num());
  }
  return make_primitive(std::move(out));
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p() || z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::InvalidInput, "integer " + z.get_str() + " exceeds the 64-bit enumeration range");
  }
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace tsl
