#include "tsl/hilbert.hpp"

#include <mutex>
#include <optional>

#include "tsl/error.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

Rational LaurentSeries::coeff(std::int64_t power) const {
  if (power < min_exp) return 0;
  const auto index = static_cast<std::size_t>(power - min_exp);
  if (index >= coeffs.size()) fail(ErrorKind::InvalidInput, "coefficient requested past the truncation order");
  return coeffs[index];
}

LaurentSeries LaurentSeries::normalized() const {
  LaurentSeries out = *this;
  std::size_t lead = 0;
  while (lead < out.coeffs.size() && out.coeffs[lead] == 0) ++lead;
  if (lead == out.coeffs.size()) return out;
  out.coeffs.erase(out.coeffs.begin(), out.coeffs.begin() + static_cast<long>(lead));
  out.min_exp += static_cast<std::int64_t>(lead);
  return out;
}

Rational bernoulli(std::size_t n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const std::size_t s = cache.size();
    // sum_{k=0}^{s} binom(s+1, k) B_k = 0
    Rational acc = 0;
    Integer binom = 1;
    for (std::size_t k = 0; k < s; ++k) {
      acc += Rational(binom) * cache[k];
      binom = binom * static_cast<unsigned long>(s + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    cache.push_back(-acc / Rational(static_cast<unsigned long>(s + 1)));
  }
  return cache[n];
}

std::vector<Integer> level_dimensions(const LatticePolytope& p_star, std::size_t k_max,
                                      const EnumerationConfig& config) {
  if (k_max < 1) fail(ErrorKind::InvalidInput, "k_max must be at least 1");
  LatticeEnumerator enumerator(p_star);
  std::vector<Integer> out;
  for (std::size_t k = 0; k <= k_max; ++k) out.push_back(enumerator.stats(static_cast<std::int64_t>(k), config).count);
  return out;
}

LaurentSeries power_sum_laurent(std::size_t j, const Rational& lambda, std::size_t order) {
  if (order < 1) fail(ErrorKind::InvalidInput, "Laurent order must be at least 1");
  if (lambda <= 0) fail(ErrorKind::InvalidInput, "lambda must be positive");
  LaurentSeries out;
  out.min_exp = -static_cast<std::int64_t>(j + 1);
  // 1/(1 - e^{-lambda t}) = sum_n (-1)^n B_n lambda^{n-1} t^{n-1} / n!
  Rational lambda_pow = 1 / lambda;
  Rational factorial = 1;
  std::vector<Rational> f0;
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) {
      lambda_pow *= lambda;
      factorial *= static_cast<unsigned long>(n);
    }
    Rational c = bernoulli(n) * lambda_pow / factorial;
    f0.push_back(n % 2 == 1 ? Rational(-c) : c);
  }
  // Apply (-1/lambda d/dt)^j: the t^{q} term of f0 contributes q(q-1)...(q-j+1) t^{q-j}.
  Rational scale = 1;
  for (std::size_t i = 0; i < j; ++i) scale *= -1 / lambda;
  for (std::size_t n = 0; n < order; ++n) {
    const std::int64_t q = static_cast<std::int64_t>(n) - 1;
    Rational falling = 1;
    for (std::size_t i = 0; i < j; ++i) falling *= q - static_cast<std::int64_t>(i);
    out.coeffs.push_back(scale * falling * f0[n]);
  }
  return out;
}

std::vector<RationalVector> laurent_functionals(const ToricPolynomials& data, std::size_t order) {
  const std::size_t m = data.weight.dim();
  if (order == 0) order = m + 2;
  const Rational lambda(static_cast<unsigned long>(m + 1));
  const auto lowest = -static_cast<std::int64_t>(m + 1);
  const auto highest = lowest + static_cast<std::int64_t>(order) - 1;

  // -t sum_j (s_j . c) PS_j(t): the t^p coefficient is -sum_j (s_j . c) [t^{p-1}] PS_j.
  std::vector<RationalVector> out(order, RationalVector(m, 0));
  for (std::size_t j = 1; j <= m + 1; ++j) {
    const RationalVector s_j = data.weight.coeff(j);
    if (is_zero(s_j)) continue;
    const auto series_top = highest - 1;
    const auto series_min = -static_cast<std::int64_t>(j + 1);
    if (series_top < series_min) continue;
    const LaurentSeries ps = power_sum_laurent(j, lambda, static_cast<std::size_t>(series_top - series_min + 1));
    for (std::size_t i = 0; i < order; ++i) {
      const Rational c = ps.coeff(lowest + static_cast<std::int64_t>(i) - 1);
      if (c == 0) continue;
      for (std::size_t d = 0; d < m; ++d) out[i][d] -= c * s_j[d];
    }
  }
  return out;
}

std::vector<RationalVector> laurent_functionals(const LatticePolytope& p_star, std::size_t order,
                                                const EnumerationConfig& config) {
  return laurent_functionals(toric_polynomials(p_star, config), order);
}

SpanComparison span_compare(std::span<const RationalVector> a, std::span<const RationalVector> b) {
  std::optional<std::size_t> dim;
  std::vector<RationalVector> all;
  for (auto set : {a, b}) {
    for (const auto& v : set) {
      if (dim && *dim != v.size()) fail(ErrorKind::DimensionMismatch, "span_compare vectors differ in length");
      dim = v.size();
      all.push_back(v);
    }
  }
  SpanComparison out;
  out.rank_a = linalg::rank(a);
  out.rank_b = linalg::rank(b);
  out.rank_union = linalg::rank(std::span<const RationalVector>(all));
  out.equal = out.rank_a == out.rank_b && out.rank_b == out.rank_union;
  return out;
}

ReebDirection reeb_direction(const LatticePolytope& p_star, RationalVector b) {
  const std::size_t m = p_star.dim();
  if (b.size() != m + 1) fail(ErrorKind::DimensionMismatch, "Reeb direction must have length m+1");
  ReebDirection out{std::move(b), false};
  const Rational height(static_cast<unsigned long>(m + 1));
  if (out.b[m] != height) return out;
  RationalVector prefix(out.b.begin(), out.b.begin() + static_cast<long>(m));
  out.in_reeb_cone = dual_polytope(p_star).contains(scaled(prefix, 1 / height));
  return out;
}

}  // namespace tsl
