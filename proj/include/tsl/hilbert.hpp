#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsl/ehrhart.hpp"
#include "tsl/polytope.hpp"

namespace tsl {

/// Truncated Laurent series sum_i coeffs[i] t^{min_exp + i}.
struct LaurentSeries {
  std::int64_t min_exp = 0;
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size(); }
  /// Coefficient of t^power; zero below min_exp. Throws InvalidInput past the truncation.
  Rational coeff(std::int64_t power) const;
  /// Leading zeros dropped (min_exp raised accordingly).
  LaurentSeries normalized() const;

  bool operator==(const LaurentSeries&) const = default;
};

/// B_n with B_1 = -1/2. Cached; safe to call from several threads.
Rational bernoulli(std::size_t n);

/// Entry k is |k P* cap Z^m| for k = 0..k_max.
std::vector<Integer> level_dimensions(const LatticePolytope& p_star, std::size_t k_max,
                                      const EnumerationConfig& config = {});

/// Expansion at t = 0 of sum_{k >= 0} k^j e^{-lambda k t}, from min_exp = -(j+1), with
/// `order` coefficients.
LaurentSeries power_sum_laurent(std::size_t j, const Rational& lambda, std::size_t order);

/// Coefficient functionals of d/ds|_0 of the Hilbert series of the cone over P* at
/// x = e^{-t(b + s c)}, b = (0, ..., 0, m+1), c = (c', 0). Entry i is the vector representing
/// the coefficient of t^{-(m+1)+i} as a function of c'. order = 0 selects m+2.
std::vector<RationalVector> laurent_functionals(const ToricPolynomials& data, std::size_t order = 0);
std::vector<RationalVector> laurent_functionals(const LatticePolytope& p_star, std::size_t order = 0,
                                                const EnumerationConfig& config = {});

struct SpanComparison {
  bool equal = true;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t rank_union = 0;
};

/// Throws DimensionMismatch when the vectors do not share one length.
SpanComparison span_compare(std::span<const RationalVector> a, std::span<const RationalVector> b);

struct ReebDirection {
  RationalVector b;
  bool in_reeb_cone = false;
};

/// Membership of b in {(b', m+1) : b' in (m+1) P}, P the polar dual of P*.
ReebDirection reeb_direction(const LatticePolytope& p_star, RationalVector b);

}  // namespace tsl
