#pragma once

#include "tsl/enumeration.hpp"
#include "tsl/polynomial.hpp"
#include "tsl/polytope.hpp"

namespace tsl {

/// E(k) = #(kP cap Z^m), interpolated through k = 0..m and checked against fresh counts at
/// k = m+1, m+2 and against the volume.
RationalPolynomial ehrhart_polynomial(const LatticePolytope& p, const EnumerationConfig& config = {});

/// s(k) = sum of the lattice points of kP, interpolated through k = 0..m+1 and checked at
/// k = m+2 and against the first moment.
VectorPolynomial weight_polynomial(const LatticePolytope& p, const EnumerationConfig& config = {});

/// Both polynomials plus the measure they were validated against, from one sweep of
/// lattice statistics over k = 0..m+2.
struct ToricPolynomials {
  RationalPolynomial ehrhart;
  VectorPolynomial weight;
  Measure measure;
  std::vector<LatticeStats> samples;  // k = 0..m+2
};

ToricPolynomials toric_polynomials(const LatticePolytope& p, const EnumerationConfig& config = {});

}  // namespace tsl
