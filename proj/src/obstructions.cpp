#include "tsl/obstructions.hpp"

#include "tsl/error.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

ExpansionPair::ExpansionPair(std::vector<Rational> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() < 2) fail(ErrorKind::InvalidInput, "expansion needs a_0..a_m with m >= 1");
  if (b_.size() != a_.size() + 1) fail(ErrorKind::InvalidInput, "expansion needs b_0..b_{m+1}");
  if (a_[0] <= 0) fail(ErrorKind::InvalidInput, "a_0 (the volume) must be positive");
}

Rational ExpansionPair::chi(const Rational& k) const {
  Rational acc = 0;
  for (const auto& c : a_) acc = acc * k + c;
  return acc;
}

Rational ExpansionPair::weight(const Rational& k) const {
  Rational acc = 0;
  for (const auto& c : b_) acc = acc * k + c;
  return acc;
}

RationalPolynomial ExpansionPair::chi_polynomial() const {
  return RationalPolynomial(std::vector<Rational>(a_.rbegin(), a_.rend()));
}

RationalPolynomial ExpansionPair::weight_polynomial() const {
  return RationalPolynomial(std::vector<Rational>(b_.rbegin(), b_.rend()));
}

ObstructionReport ono_vectors(const ToricPolynomials& data) {
  const std::size_t m = data.weight.dim();
  const Rational& vol = data.measure.volume;
  const RationalVector& moment = data.measure.moment;
  auto term = [&](std::size_t j) {
    RationalVector f = scaled(data.weight.coeff(j), vol);
    const Rational e_prev = j == 0 ? Rational(0) : data.ehrhart.coeff(j - 1);
    for (std::size_t i = 0; i < m; ++i) f[i] -= e_prev * moment[i];
    return f;
  };
  ensure(is_zero(term(0)), "constant term of Vol s(k) - k E(k) integral(x) must vanish");
  ensure(is_zero(term(m + 1)), "top term of Vol s(k) - k E(k) integral(x) must cancel");

  ObstructionReport report;
  for (std::size_t j = 1; j <= m; ++j) report.ono_vectors.push_back(term(j));
  report.rank = linalg::rank(std::span<const RationalVector>(report.ono_vectors));
  report.all_zero = report.rank == 0;
  report.pairwise_proportional = report.rank <= 1;
  return report;
}

ObstructionReport ono_vectors(const LatticePolytope& p, const EnumerationConfig& config) {
  if (!is_delzant(p)) fail(ErrorKind::InvalidInput, "obstruction vectors need an integral Delzant polytope");
  return ono_vectors(toric_polynomials(p, config));
}

bool chow_level_test(const LatticePolytope& p, std::int64_t level, const EnumerationConfig& config) {
  if (level < 1) fail(ErrorKind::InvalidInput, "Chow level must be positive");
  if (!p.is_integral() || p.is_point()) fail(ErrorKind::InvalidInput, "Chow level test needs an integral polytope");
  const auto dilation = dilate(p, level);
  const auto lattice = LatticeEnumerator(dilation).stats(1, config);
  const Measure mu = measure(dilation);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Rational rhs = Rational(lattice.count) / mu.volume * mu.moment[i];
    if (Rational(lattice.coordinate_sum[i]) != rhs) return false;
  }
  return true;
}

Rational f_ell(const ExpansionPair& e, std::size_t ell) {
  if (ell < 1 || ell > e.dim()) fail(ErrorKind::InvalidInput, "F_l needs 1 <= l <= m");
  const auto& a = e.a();
  const auto& b = e.b();
  return (a[0] * b[ell] - b[0] * a[ell]) / (a[0] * a[0]);
}

Rational chow_weight(const ExpansionPair& e, std::int64_t k) {
  if (k < 1) fail(ErrorKind::InvalidInput, "Chow weight needs k >= 1");
  const Rational kk(static_cast<long>(k));
  const Rational chi = e.chi(kk);
  if (chi == 0) fail(ErrorKind::DivisionByZero, "chi(k) = 0 at k = " + std::to_string(k));
  return e.weight(kk) / (kk * chi) - e.b()[0] / e.a()[0];
}

ExpansionPair toric_expansions(const ToricPolynomials& data, std::span<const Rational> direction) {
  const std::size_t m = data.weight.dim();
  if (direction.size() != m) fail(ErrorKind::DimensionMismatch, "direction length differs from polytope dimension");
  std::vector<Rational> a, b;
  for (std::size_t j = 0; j <= m; ++j) a.push_back(data.ehrhart.coeff(m - j));
  const RationalPolynomial w = data.weight.dot(direction);
  for (std::size_t j = 0; j <= m; ++j) b.push_back(w.coeff(m + 1 - j));
  ensure(w.coeff(0) == 0, "toric weight polynomial must have no constant term");
  b.emplace_back(0);
  return ExpansionPair(std::move(a), std::move(b));
}

ExpansionPair toric_expansions(const LatticePolytope& p, std::span<const Rational> direction,
                               const EnumerationConfig& config) {
  if (!is_delzant(p)) fail(ErrorKind::InvalidInput, "toric expansions need an integral Delzant polytope");
  return toric_expansions(toric_polynomials(p, config), direction);
}

namespace {

// p(x) -> p(x - 1)
RationalPolynomial shift_back(const RationalPolynomial& p) {
  RationalPolynomial out;
  const RationalPolynomial x_minus_1({Rational(-1), Rational(1)});
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out = out * x_minus_1 + RationalPolynomial({*it});
  return out;
}

// Polynomial of degree <= degree through values[n] at x = n + 1, validated on the surplus.
RationalPolynomial fit_from_one(const std::vector<Rational>& values, std::size_t degree) {
  std::vector<Rational> nodes(values.begin(), values.begin() + static_cast<long>(degree + 1));
  RationalPolynomial p = shift_back(interpolate_forward(nodes));
  for (std::size_t n = degree + 1; n < values.size(); ++n) {
    if (p(Rational(static_cast<long>(n + 1))) != values[n]) {
      fail(ErrorKind::FitFailed, "grid values are not a polynomial of the expected bidegree");
    }
  }
  return p;
}

}  // namespace

HilbertWeightTable hilbert_weight_table(const ExpansionPair& e, std::size_t r_max, std::size_t k_max) {
  const std::size_t m = e.dim();
  if (r_max < m + 2 || k_max < m + 2) {
    fail(ErrorKind::FitFailed, "grid must extend to at least m+2 = " + std::to_string(m + 2) + " in r and k");
  }
  HilbertWeightTable t;
  t.r_max = r_max;
  t.k_max = k_max;
  t.values.assign(r_max, std::vector<Rational>(k_max));
  std::vector<std::vector<Rational>> scaled_values(r_max, std::vector<Rational>(k_max));
  for (std::size_t r = 1; r <= r_max; ++r) {
    const Rational rq(static_cast<long>(r));
    const Rational r_chi = rq * e.chi(rq);
    if (r_chi == 0) fail(ErrorKind::DivisionByZero, "chi(r) = 0 at r = " + std::to_string(r));
    const Rational ratio = e.weight(rq) / r_chi;
    for (std::size_t k = 1; k <= k_max; ++k) {
      const Rational s(static_cast<long>(r * k));
      const Rational v = -e.weight(s) + ratio * s * e.chi(s);
      t.values[r - 1][k - 1] = v;
      scaled_values[r - 1][k - 1] = r_chi * v;
    }
  }

  // Fit in k for each r, then divide the k^j coefficient by r^j and fit in r.
  std::vector<std::vector<Rational>> by_power(m + 2, std::vector<Rational>(r_max));
  for (std::size_t r = 1; r <= r_max; ++r) {
    RationalPolynomial in_k = fit_from_one(scaled_values[r - 1], m + 1);
    Integer r_pow = 1;
    for (std::size_t j = 0; j <= m + 1; ++j) {
      by_power[j][r - 1] = in_k.coeff(j) / Rational(r_pow);
      r_pow *= static_cast<unsigned long>(r);
    }
  }
  t.coefficients.assign(m + 2, std::vector<Rational>(m + 2, 0));
  for (std::size_t j = 0; j <= m + 1; ++j) {
    RationalPolynomial in_r = fit_from_one(by_power[j], m + 1);
    for (std::size_t i = 0; i <= m + 1; ++i) t.coefficients[i][j] = in_r.coeff(i);
  }

  t.top_coefficient_vanishes = t.coefficients[m + 1][m + 1] == 0;
  ensure(t.top_coefficient_vanishes, "a_{m+1,m+1} must vanish");
  t.sign_a_m_top = sign(t.coefficients[m][m + 1]);
  t.sign_f1 = sign(f_ell(e, 1));
  t.signs_agree = t.sign_a_m_top == t.sign_f1;
  t.chow_signs_agree = true;
  for (std::size_t r = 1; r <= r_max; ++r) {
    const Rational rq(static_cast<long>(r));
    Rational series = 0;
    for (std::size_t i = m + 1; i-- > 0;) series = series * rq + t.coefficients[i][m + 1];
    if (sign(series) != sign(chow_weight(e, static_cast<std::int64_t>(r)))) t.chow_signs_agree = false;
  }
  return t;
}

}  // namespace tsl
