#pragma once

#include <span>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

/// Univariate polynomial in k with exact coefficients; coeffs[j] multiplies k^j.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& k) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// The monomial k^n.
  static RationalPolynomial monomial(std::size_t n, const Rational& c = 1);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// R^m-valued polynomial: coeffs[j] is the vector coefficient of k^j.
class VectorPolynomial {
 public:
  VectorPolynomial(std::size_t dim, std::vector<RationalVector> coeffs);

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  RationalVector coeff(std::size_t j) const;
  RationalVector operator()(const Rational& k) const;

  RationalPolynomial component(std::size_t i) const;
  /// The scalar polynomial k -> s(k) . c.
  RationalPolynomial dot(std::span<const Rational> c) const;

  friend bool operator==(const VectorPolynomial&, const VectorPolynomial&) = default;

 private:
  std::size_t dim_;
  std::vector<RationalVector> coeffs_;
};

/// Unique polynomial of degree < values.size() through (i, values[i]), i = 0, 1, ...,
/// via Newton forward differences: p(k) = sum_j (Delta^j y_0) binom(k, j).
RationalPolynomial interpolate_forward(std::span<const Rational> values);

}  // namespace tsl
