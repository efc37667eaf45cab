#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

struct BundleComponent {
  std::int64_t rank = 1;
  Integer degree;
  Rational weight;
};

/// E = E_1 + ... + E_s over a curve of genus g, polarized by O(r) twisted by a line
/// bundle B of degree deg_B; E_j carries C*-weight lambda_j.
struct BundleSpec {
  std::int64_t genus = 0;
  std::int64_t twist_r = 1;
  Integer deg_B;
  std::vector<BundleComponent> components;

  std::int64_t total_rank() const;
  /// Throws InvalidInput unless g >= 0, r >= 1, every rank >= 1 and the total rank >= 2.
  void validate() const;
};

struct BundleMeasures {
  Rational mu_total;
  std::vector<Rational> mu;  // per component
  /// sum_j lambda_j rank_j (mu_j - mu)
  Rational weight_sum;
  /// chi(det(E (x) B^{-1/r})) by formal Riemann-Roch
  Rational chi_det_twist;
  /// mu(E (x) B^{-1/r})
  Rational mu_twist;
};

BundleMeasures bundle_measures(const BundleSpec& spec);

/// Factors of the closed-form Chow weight, exposed for independent checking.
struct ChowBundleFactors {
  Rational binomial_factor;  // binom(n-1+kr, n)/(n+1)
  Rational chi_det_twist;
  Rational mu_twist;
  Rational chi_symmetric;    // chi(S^{kr}(E* (x) B^{1/r}))
  Rational weight_sum;
  Rational value;
};

/// Throws ZeroSlope when mu(E (x) B^{-1/r}) = 0 and ZeroChi when chi(S^{kr} V) = 0.
ChowBundleFactors chow_bundle_factors(const BundleSpec& spec, std::int64_t k);
Rational chow_weight_bundle(const BundleSpec& spec, std::int64_t k);

struct BundleFunctional {
  Rational value;  // with the positive constant C set to 1
  bool vanishes = false;
  int sign = 0;
  bool polystable_slopes = false;
  std::string caveat;
  std::vector<std::string> warnings;
};

/// -chi(det(E (x) B^{-1/r})) / mu(E (x) B^{-1/r})^2 * weight_sum. Throws ZeroSlope.
BundleFunctional f_ell_bundle(const BundleSpec& spec);

}  // namespace tsl
