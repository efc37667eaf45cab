#include "tsl/ehrhart.hpp"

#include "tsl/error.hpp"

namespace tsl {

namespace {

void require_lattice_polytope(const LatticePolytope& p) {
  if (p.is_point()) fail(ErrorKind::InvalidInput, "Ehrhart data needs a full-dimensional polytope");
  if (!p.is_integral()) fail(ErrorKind::InvalidInput, "Ehrhart data needs integral vertices");
}

}  // namespace

ToricPolynomials toric_polynomials(const LatticePolytope& p, const EnumerationConfig& config) {
  require_lattice_polytope(p);
  const std::size_t m = p.dim();
  LatticeEnumerator enumerator(p);
  std::vector<LatticeStats> samples;
  for (std::size_t k = 0; k <= m + 2; ++k) samples.push_back(enumerator.stats(static_cast<std::int64_t>(k), config));

  std::vector<Rational> counts;
  for (std::size_t k = 0; k <= m; ++k) counts.emplace_back(samples[k].count);
  RationalPolynomial ehrhart = interpolate_forward(counts);
  for (std::size_t k = m + 1; k <= m + 2; ++k) {
    if (ehrhart(Rational(static_cast<long>(k))) != Rational(samples[k].count)) {
      fail(ErrorKind::ValidationFailed, "Ehrhart interpolant misses the count at k = " + std::to_string(k));
    }
  }

  std::vector<RationalVector> coeff_vectors(m + 2, RationalVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> sums;
    for (std::size_t k = 0; k <= m + 1; ++k) sums.emplace_back(samples[k].coordinate_sum[i]);
    RationalPolynomial comp = interpolate_forward(sums);
    if (comp(Rational(static_cast<long>(m + 2))) != Rational(samples[m + 2].coordinate_sum[i])) {
      fail(ErrorKind::ValidationFailed, "weight interpolant misses the lattice sum at k = " + std::to_string(m + 2));
    }
    for (std::size_t j = 0; j < m + 2; ++j) coeff_vectors[j][i] = comp.coeff(j);
  }
  VectorPolynomial weight(m, std::move(coeff_vectors));

  Measure mu = measure(p);
  if (ehrhart.degree() != static_cast<int>(m) || ehrhart.leading() != mu.volume) {
    fail(ErrorKind::ValidationFailed, "Ehrhart leading coefficient differs from the volume");
  }
  if (weight.coeff(m + 1) != mu.moment) {
    fail(ErrorKind::ValidationFailed, "weight polynomial leading coefficient differs from the moment");
  }
  if (ehrhart(0) != 1 || !is_zero(weight.coeff(0))) {
    fail(ErrorKind::ValidationFailed, "zero dilation does not give E(0) = 1 and s(0) = 0");
  }
  return ToricPolynomials{std::move(ehrhart), std::move(weight), std::move(mu), std::move(samples)};
}

RationalPolynomial ehrhart_polynomial(const LatticePolytope& p, const EnumerationConfig& config) {
  require_lattice_polytope(p);
  const std::size_t m = p.dim();
  LatticeEnumerator enumerator(p);
  std::vector<Rational> counts;
  for (std::size_t k = 0; k <= m; ++k) counts.emplace_back(enumerator.stats(static_cast<std::int64_t>(k), config).count);
  RationalPolynomial e = interpolate_forward(counts);
  for (std::size_t k = m + 1; k <= m + 2; ++k) {
    auto fresh = enumerator.stats(static_cast<std::int64_t>(k), config).count;
    if (e(Rational(static_cast<long>(k))) != Rational(fresh)) {
      fail(ErrorKind::ValidationFailed, "Ehrhart interpolant misses the count at k = " + std::to_string(k));
    }
  }
  if (e.degree() != static_cast<int>(m) || e.leading() != measure(p).volume) {
    fail(ErrorKind::ValidationFailed, "Ehrhart leading coefficient differs from the volume");
  }
  return e;
}

VectorPolynomial weight_polynomial(const LatticePolytope& p, const EnumerationConfig& config) {
  return toric_polynomials(p, config).weight;
}

}  // namespace tsl
