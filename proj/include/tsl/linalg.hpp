#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl::linalg {

/// Rank over Q by fraction-free (Bareiss) elimination. Rows are scaled to integers first,
/// so no pivot tolerance is involved.
std::size_t rank(std::span<const RationalVector> rows);
std::size_t rank(std::span<const IntegerVector> rows);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const RationalVector> points);

Integer determinant(IntegerMatrix m);
Rational determinant(const RationalMatrix& m);

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector apply(const RationalMatrix& a, std::span<const Rational> x);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix identity(std::size_t n);

/// Extreme rays of the pointed polyhedral cone {y : row . y >= 0 for every row}.
/// Each ray is returned as a primitive integer vector. The rows must have full column
/// rank; otherwise the cone has a lineality space and Unbounded is thrown.
/// Incremental double description with the combinatorial adjacency test.
std::vector<IntegerVector> extreme_rays(std::span<const IntegerVector> rows);

}  // namespace tsl::linalg
