#include "tsl/projbundle.hpp"

#include "tsl/error.hpp"

namespace tsl {

namespace {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational of(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

std::int64_t BundleSpec::total_rank() const {
  std::int64_t n = 0;
  for (const auto& c : components) n += c.rank;
  return n;
}

void BundleSpec::validate() const {
  if (genus < 0) fail(ErrorKind::InvalidInput, "genus must be nonnegative");
  if (twist_r < 1) fail(ErrorKind::InvalidInput, "twist r must be positive");
  if (components.empty()) fail(ErrorKind::InvalidInput, "bundle needs at least one component");
  for (const auto& c : components) {
    if (c.rank < 1) fail(ErrorKind::InvalidInput, "component rank must be positive");
  }
  if (total_rank() < 2) fail(ErrorKind::InvalidInput, "total rank must be at least 2");
}

BundleMeasures bundle_measures(const BundleSpec& spec) {
  spec.validate();
  const std::int64_t n = spec.total_rank();
  Integer degree = 0;
  for (const auto& c : spec.components) degree += c.degree;

  BundleMeasures out;
  out.mu_total = Rational(degree) / of(n);
  out.mu_total.canonicalize();
  out.weight_sum = 0;
  for (const auto& c : spec.components) {
    Rational mu_j = Rational(c.degree) / of(c.rank);
    mu_j.canonicalize();
    out.mu.push_back(mu_j);
    out.weight_sum += c.weight * of(c.rank) * (mu_j - out.mu_total);
  }
  const Rational twist = Rational(spec.deg_B) / of(spec.twist_r);
  const Rational det_degree = Rational(degree) - of(n) * twist;
  out.chi_det_twist = det_degree + of(1 - spec.genus);
  out.mu_twist = out.mu_total - twist;
  return out;
}

ChowBundleFactors chow_bundle_factors(const BundleSpec& spec, std::int64_t k) {
  if (k < 1) fail(ErrorKind::InvalidInput, "k must be positive");
  const BundleMeasures bm = bundle_measures(spec);
  const std::int64_t n = spec.total_rank();
  const std::int64_t big_n = k * spec.twist_r;

  ChowBundleFactors f;
  f.binomial_factor = Rational(binomial(n - 1 + big_n, n)) / of(n + 1);
  f.chi_det_twist = bm.chi_det_twist;
  f.mu_twist = bm.mu_twist;
  f.weight_sum = bm.weight_sum;
  if (f.mu_twist == 0) fail(ErrorKind::ZeroSlope, "mu(E (x) B^{-1/r}) = 0");

  // V = E* (x) B^{1/r}: mu(V) = -mu(E) + deg_B / r.
  const Rational mu_v = -bm.mu_total + Rational(spec.deg_B) / of(spec.twist_r);
  const Rational rank_s = Rational(binomial(big_n + n - 1, n - 1));
  f.chi_symmetric = rank_s * of(big_n) * mu_v + rank_s * of(1 - spec.genus);
  if (f.chi_symmetric == 0) fail(ErrorKind::ZeroChi, "chi(S^{kr} V) = 0 at k = " + std::to_string(k));

  f.value = f.binomial_factor * f.chi_det_twist / (f.mu_twist * f.chi_symmetric) * f.weight_sum;
  return f;
}

Rational chow_weight_bundle(const BundleSpec& spec, std::int64_t k) { return chow_bundle_factors(spec, k).value; }

BundleFunctional f_ell_bundle(const BundleSpec& spec) {
  const BundleMeasures bm = bundle_measures(spec);
  if (bm.mu_twist == 0) fail(ErrorKind::ZeroSlope, "mu(E (x) B^{-1/r}) = 0");
  BundleFunctional out;
  out.value = -bm.chi_det_twist / (bm.mu_twist * bm.mu_twist) * bm.weight_sum;
  out.vanishes = bm.weight_sum == 0;
  out.sign = sign(out.value);
  out.polystable_slopes = true;
  for (const auto& mu_j : bm.mu) {
    if (mu_j != bm.mu_total) out.polystable_slopes = false;
  }
  out.caveat = "positive constant C normalized to 1; only sign and vanishing are meaningful";
  out.warnings.push_back("ampleness of O(r) (x) pi^*B is not verified");
  return out;
}

}  // namespace tsl
