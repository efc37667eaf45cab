#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tsl/ehrhart.hpp"
#include "tsl/polytope.hpp"

namespace tsl {

/// Leading coefficients of
///   chi(k) = a_0 k^m + a_1 k^{m-1} + ... + a_m
///   w(k)   = b_0 k^{m+1} + b_1 k^m + ... + b_{m+1}
class ExpansionPair {
 public:
  ExpansionPair(std::vector<Rational> a, std::vector<Rational> b);

  std::size_t dim() const { return a_.size() - 1; }
  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }

  Rational chi(const Rational& k) const;
  Rational weight(const Rational& k) const;
  RationalPolynomial chi_polynomial() const;
  RationalPolynomial weight_polynomial() const;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

struct ObstructionReport {
  std::vector<RationalVector> ono_vectors;  // F_1..F_m, index j-1
  bool all_zero = true;
  std::size_t rank = 0;
  bool pairwise_proportional = true;

  std::string_view verdict() const { return all_zero ? "passes-necessary-condition" : "obstructed"; }
};

/// F_j = Vol s_j - E_{j-1} * integral(x), j = 1..m. The j = m+1 term cancels identically
/// and is checked.
ObstructionReport ono_vectors(const ToricPolynomials& data);
ObstructionReport ono_vectors(const LatticePolytope& p, const EnumerationConfig& config = {});

/// Exact comparison s(i) == E(i) / Vol(i P) * integral over iP of x, with the left side
/// from a direct lattice sum and the right from the count and measure of the dilation.
bool chow_level_test(const LatticePolytope& p, std::int64_t level, const EnumerationConfig& config = {});

/// (a_0 b_l - b_0 a_l) / a_0^2 for l in 1..m.
Rational f_ell(const ExpansionPair& e, std::size_t ell);

/// w(k) / (k chi(k)) - b_0 / a_0.
Rational chow_weight(const ExpansionPair& e, std::int64_t k);

/// a_j from E(k), b_j from s(k) . c; b_{m+1} = 0.
ExpansionPair toric_expansions(const ToricPolynomials& data, std::span<const Rational> direction);
ExpansionPair toric_expansions(const LatticePolytope& p, std::span<const Rational> direction,
                               const EnumerationConfig& config = {});

struct HilbertWeightTable {
  std::size_t r_max = 0;
  std::size_t k_max = 0;
  /// values[r-1][k-1] = w~(r, k).
  std::vector<std::vector<Rational>> values;
  /// coefficients[i][j] = a_{i,j} with r chi(r) w~(r,k) = sum a_{i,j} r^{i+j} k^j.
  std::vector<std::vector<Rational>> coefficients;
  bool top_coefficient_vanishes = false;  // a_{m+1,m+1} == 0
  int sign_a_m_top = 0;                   // sign(a_{m,m+1})
  int sign_f1 = 0;
  bool signs_agree = false;
  /// sign(sum_i a_{i,m+1} r^i) == sign(Chow(M, L^r)) for every r in the grid.
  bool chow_signs_agree = false;
};

/// Throws FitFailed when r_max or k_max is below m+2.
HilbertWeightTable hilbert_weight_table(const ExpansionPair& e, std::size_t r_max, std::size_t k_max);

}  // namespace tsl
