#include <doctest.h>

#include "helpers.hpp"
#include "tsl/error.hpp"
#include "tsl/io.hpp"
#include "tsl/projbundle.hpp"

using namespace testing;
using tsl::BundleComponent;
using tsl::BundleSpec;

namespace {

BundleSpec spec(long genus, long r, long deg_b, std::initializer_list<std::tuple<long, long, const char*>> comps) {
  BundleSpec s;
  s.genus = genus;
  s.twist_r = r;
  s.deg_B = deg_b;
  for (auto [n, d, w] : comps) s.components.push_back(BundleComponent{n, Integer(d), q(w)});
  return s;
}

BundleSpec shifted(BundleSpec s, const Rational& c) {
  for (auto& comp : s.components) comp.weight += c;
  return s;
}

Integer binom(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("bundle measures") {
  auto a = tsl::bundle_measures(spec(2, 1, 0, {{1, 0, "1"}, {1, 1, "-1"}}));
  CHECK(a.mu_total == q("1/2"));
  CHECK(a.weight_sum == -1);
  CHECK(a.chi_det_twist == 0);
  auto b = tsl::bundle_measures(spec(2, 1, 0, {{1, 1, "5"}, {1, 1, "7"}}));
  CHECK(b.mu == std::vector<Rational>{1, 1});
  CHECK(b.weight_sum == 0);
  auto c = tsl::bundle_measures(spec(0, 1, 0, {{2, 0, "0"}}));
  CHECK(c.mu_total == 0);
  CHECK(c.weight_sum == 0);
}

TEST_CASE("invalid bundle descriptions") {
  CHECK_THROWS_AS(tsl::bundle_measures(spec(2, 1, 0, {{1, 0, "1"}})), tsl::Error);
  CHECK_THROWS_AS(tsl::bundle_measures(spec(-1, 1, 0, {{2, 0, "1"}})), tsl::Error);
  CHECK_THROWS_AS(tsl::bundle_measures(spec(2, 0, 0, {{2, 0, "1"}})), tsl::Error);
  CHECK_THROWS_AS(tsl::bundle_measures(spec(2, 1, 0, {{0, 0, "1"}, {2, 0, "1"}})), tsl::Error);
  try {
    tsl::f_ell_bundle(spec(0, 1, 0, {{2, 0, "0"}}));
    FAIL("expected ZeroSlope");
  } catch (const tsl::Error& e) {
    CHECK(e.kind() == tsl::ErrorKind::ZeroSlope);
  }
}

TEST_CASE("equal slopes give vanishing invariants") {
  auto s = spec(2, 1, 0, {{1, 1, "5"}, {1, 1, "7"}});
  for (long k = 1; k <= 5; ++k) CHECK(tsl::chow_weight_bundle(s, k) == 0);
  auto f = tsl::f_ell_bundle(s);
  CHECK(f.vanishes);
  CHECK(f.sign == 0);
  CHECK(f.polystable_slopes);
  CHECK_FALSE(f.caveat.empty());
  CHECK_FALSE(f.warnings.empty());
  auto single = tsl::f_ell_bundle(spec(3, 2, 1, {{3, 4, "1/2"}}));
  CHECK(single.vanishes);
}

TEST_CASE("factor decomposition matches a hand evaluation") {
  // g = 2, r = 1, deg_B = 0, O + O(p): chi(det) = 1 + (1 - 2) = 0, so the weight vanishes
  // although weight_sum = -1.
  auto s = spec(2, 1, 0, {{1, 0, "1"}, {1, 1, "-1"}});
  auto f = tsl::chow_bundle_factors(s, 1);
  CHECK(f.binomial_factor == q("1/3"));  // binom(2, 2) / 3
  CHECK(f.chi_det_twist == 0);
  CHECK(f.mu_twist == q("1/2"));
  CHECK(f.chi_symmetric == q("-3"));  // rank 2, mu(V) = -1/2: 2 * (-1/2) + 2 * (-1)
  CHECK(f.weight_sum == -1);
  CHECK(f.value == 0);
  CHECK(tsl::sign(f.value) == tsl::sign(f.chi_det_twist / f.mu_twist) * tsl::sign(f.weight_sum) * tsl::sign(f.chi_symmetric));
}

TEST_CASE("split genus-2 catalog bundle: nonzero and sign-consistent") {
  auto s = tsl::io::bundle_from_json(tsl::catalog_entry("bundle-split-g2").data);
  auto f = tsl::f_ell_bundle(s);
  CHECK(f.value == q("16/25"));
  CHECK_FALSE(f.vanishes);
  CHECK_FALSE(f.polystable_slopes);
  for (long k = 1; k <= 5; ++k) {
    auto w = tsl::chow_weight_bundle(s, k);
    CHECK(w != 0);
    CHECK(tsl::sign(w) == f.sign);
    // Independent evaluation: n = 2, N = k, mu(E (x) B^-1) = 5/2, chi(det) = 4,
    // chi(S^k V) = (k+1) k (-5/2) + (k+1)(-1).
    const Rational chi_s = Rational(k + 1) * k * q("-5/2") - Rational(k + 1);
    const Rational expected = Rational(binom(1 + k, 2)) / 3 * 4 / (q("5/2") * chi_s) * (-1);
    CHECK(w == expected);
  }
}

TEST_CASE("weight shift and line bundle twist invariance") {
  for (auto s : {spec(2, 1, -2, {{1, 0, "1"}, {1, 1, "-1"}}), spec(3, 2, 1, {{2, 1, "1/3"}, {1, -2, "4"}, {1, 5, "0"}}),
                 spec(2, 1, 0, {{1, 1, "5"}, {1, 1, "7"}})}) {
    auto base_f = tsl::f_ell_bundle(s);
    for (const Rational c : {Rational(3), Rational(-7, 2)}) {
      auto t = shifted(s, c);
      CHECK(tsl::f_ell_bundle(t).value == base_f.value);
      for (long k = 1; k <= 5; ++k) CHECK(tsl::chow_weight_bundle(t, k) == tsl::chow_weight_bundle(s, k));
    }
    auto twisted = s;
    for (auto& comp : twisted.components) comp.degree += comp.rank * 2;
    CHECK(tsl::bundle_measures(twisted).weight_sum == tsl::bundle_measures(s).weight_sum);
  }
}

TEST_CASE("Chow weight vanishes iff f_ell vanishes when chi(det) is nonzero") {
  for (auto s : {spec(2, 1, -2, {{1, 0, "1"}, {1, 1, "-1"}}), spec(2, 2, 1, {{2, 1, "1/3"}, {1, -2, "4"}, {1, 5, "0"}}),
                 spec(2, 1, 0, {{1, 1, "5"}, {1, 1, "7"}}), spec(4, 3, 2, {{1, 2, "1"}, {2, 4, "9"}})}) {
    auto f = tsl::f_ell_bundle(s);
    REQUIRE(tsl::bundle_measures(s).chi_det_twist != 0);
    for (long k = 1; k <= 5; ++k) CHECK((tsl::chow_weight_bundle(s, k) == 0) == f.vanishes);
  }
}
