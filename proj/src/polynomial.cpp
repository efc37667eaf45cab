#include "tsl/polynomial.hpp"

#include <algorithm>

#include "tsl/error.hpp"

namespace tsl {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& k) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::monomial(std::size_t n, const Rational& c) {
  std::vector<Rational> coeffs(n + 1, 0);
  coeffs[n] = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return RationalPolynomial(std::move(c));
}

VectorPolynomial::VectorPolynomial(std::size_t dim, std::vector<RationalVector> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.size() != dim_) fail(ErrorKind::DimensionMismatch, "vector polynomial coefficient length");
  }
  while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
}

RationalVector VectorPolynomial::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : RationalVector(dim_, 0);
}

RationalVector VectorPolynomial::operator()(const Rational& k) const {
  RationalVector acc(dim_, 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (std::size_t i = 0; i < dim_; ++i) acc[i] = acc[i] * k + (*it)[i];
  }
  return acc;
}

RationalPolynomial VectorPolynomial::component(std::size_t i) const {
  std::vector<Rational> c;
  for (const auto& v : coeffs_) c.push_back(v[i]);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial VectorPolynomial::dot(std::span<const Rational> c) const {
  if (c.size() != dim_) fail(ErrorKind::DimensionMismatch, "direction length differs from polynomial dimension");
  std::vector<Rational> out;
  for (const auto& v : coeffs_) out.push_back(tsl::dot(v, c));
  return RationalPolynomial(std::move(out));
}

RationalPolynomial interpolate_forward(std::span<const Rational> values) {
  std::vector<Rational> diffs(values.begin(), values.end());
  RationalPolynomial result;
  RationalPolynomial falling({Rational(1)});  // binom(k, j) with j = 0
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    result = result + diffs[0] * falling;
    for (std::size_t i = 0; i + 1 < diffs.size() - j; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    // binom(k, j+1) = binom(k, j) (k - j) / (j + 1)
    falling = Rational(1, static_cast<unsigned long>(j + 1)) * (falling * RationalPolynomial({Rational(-static_cast<long>(j)), Rational(1)}));
  }
  return result;
}

}  // namespace tsl
