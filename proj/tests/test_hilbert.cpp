#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tsl/error.hpp"
#include "tsl/hilbert.hpp"
#include "tsl/obstructions.hpp"

using namespace testing;

namespace {

std::vector<Rational> rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(q(x));
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(tsl::bernoulli(0) == 1);
  CHECK(tsl::bernoulli(1) == q("-1/2"));
  CHECK(tsl::bernoulli(2) == q("1/6"));
  CHECK(tsl::bernoulli(3) == 0);
  CHECK(tsl::bernoulli(4) == q("-1/30"));
  CHECK(tsl::bernoulli(12) == q("-691/2730"));
}

TEST_CASE("Bernoulli cache is safe under concurrent first use") {
  std::vector<Rational> results(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < results.size(); ++i) {
    pool.emplace_back([&results, i] { results[i] = tsl::bernoulli(30 + i % 3); });
  }
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i] == tsl::bernoulli(30 + i % 3));
  CHECK(tsl::bernoulli(30) == q("8615841276005/14322"));
}

TEST_CASE("level dimensions") {
  CHECK(tsl::level_dimensions(catalog_polytope("cp1"), 3) == ints({1, 3, 5, 7}));
  CHECK(tsl::level_dimensions(catalog_polytope("cp2"), 2) == ints({1, 10, 28}));
  CHECK(tsl::level_dimensions(catalog_polytope("hirzebruch-f1"), 1) == ints({1, 9}));
  for (auto name : fano_names()) {
    auto p = catalog_polytope(name);
    auto e = tsl::ehrhart_polynomial(p);
    auto dims = tsl::level_dimensions(p, 5);
    for (std::size_t k = 0; k < dims.size(); ++k) CHECK(Rational(dims[k]) == e(static_cast<long>(k)));
  }
}

TEST_CASE("power-sum Laurent expansions") {
  auto s0 = tsl::power_sum_laurent(0, 1, 4);
  CHECK(s0.min_exp == -1);
  CHECK(s0.coeffs == rs({"1", "1/2", "1/12", "0"}));
  auto s1 = tsl::power_sum_laurent(1, 1, 4);
  CHECK(s1.min_exp == -2);
  CHECK(s1.coeffs == rs({"1", "0", "-1/12", "0"}));
  auto s2 = tsl::power_sum_laurent(0, 2, 2);
  CHECK(s2.coeffs == rs({"1/2", "1/2"}));
  for (std::size_t j = 0; j <= 6; ++j) {
    for (long lambda : {1, 3}) {
      auto s = tsl::power_sum_laurent(j, lambda, 3);
      Rational expected = 1;
      for (std::size_t i = 1; i <= j; ++i) expected *= static_cast<unsigned long>(i);
      for (std::size_t i = 0; i <= j; ++i) expected /= lambda;
      CHECK(s.coeffs[0] == expected);
      CHECK(s.min_exp == -static_cast<long>(j) - 1);
    }
  }
  CHECK_THROWS_AS(tsl::power_sum_laurent(0, 1, 0), tsl::Error);
  CHECK_THROWS_AS(tsl::power_sum_laurent(0, 0, 1), tsl::Error);
}

TEST_CASE("Laurent normalization strips leading zeros") {
  tsl::LaurentSeries s{-3, rs({"0", "0", "2", "1"})};
  auto n = s.normalized();
  CHECK(n.min_exp == -1);
  CHECK(n.coeffs == rs({"2", "1"}));
  tsl::LaurentSeries zero{-2, rs({"0", "0"})};
  CHECK(zero.normalized() == zero);
  CHECK(s.coeff(-5) == 0);
  CHECK(s.coeff(-1) == 2);
  CHECK_THROWS_AS(s.coeff(1), tsl::Error);
}

TEST_CASE("power-sum expansions agree with high-precision summation") {
  using oracle::Float;
  const Float t = Float(1) / 16;
  for (unsigned j = 0; j <= 4; ++j) {
    for (long lambda : {1, 2, 8}) {
      const std::size_t order = j + 14;
      auto series = tsl::power_sum_laurent(j, lambda, order);
      Float partial = 0;
      for (std::size_t i = 0; i + 1 < order; ++i) {
        partial += oracle::to_float(series.coeffs[i]) * pow(t, static_cast<int>(series.min_exp + static_cast<long>(i)));
      }
      // First omitted nonzero term, from a longer expansion.
      auto longer = tsl::power_sum_laurent(j, lambda, order + 4);
      std::size_t next = order - 1;
      while (longer.coeffs[next] == 0) ++next;
      const Float bound = abs(oracle::to_float(longer.coeffs[next]) * pow(t, static_cast<int>(longer.min_exp + static_cast<long>(next))));
      const Float numeric = oracle::power_sum_numeric(j, Float(lambda), t);
      CHECK(abs(numeric - partial) <= bound);
      CHECK(bound < Float(1e-8));
    }
  }
}

TEST_CASE("Laurent functionals vanish for symmetric Fanos") {
  for (auto name : {"cp1", "cp2", "cp1xcp1", "dp3"}) {
    for (const auto& f : tsl::laurent_functionals(catalog_polytope(name))) CHECK(tsl::is_zero(f));
  }
}

TEST_CASE("Laurent functionals of the one-point blow-up") {
  auto p = catalog_polytope("hirzebruch-f1");
  auto fs = tsl::laurent_functionals(p);
  CHECK(fs.size() == 4);
  bool some_nonzero = false;
  for (const auto& f : fs) {
    CHECK(f[0] == f[1]);
    some_nonzero = some_nonzero || !tsl::is_zero(f);
  }
  CHECK(some_nonzero);
  // Lowest order coefficient is proportional to the barycenter.
  auto bary = tsl::measure(p).barycenter;
  CHECK(tsl::span_compare(std::vector<RationalVector>{fs[0]}, std::vector<RationalVector>{bary}).equal);
  CHECK(tsl::laurent_functionals(p, 6).size() == 6);
}

TEST_CASE("lowest Laurent functional tracks the barycenter on every Fano") {
  for (auto name : fano_names()) {
    auto p = catalog_polytope(name);
    auto fs = tsl::laurent_functionals(p);
    auto bary = tsl::measure(p).barycenter;
    auto cmp = tsl::span_compare(std::vector<RationalVector>{fs[0]}, std::vector<RationalVector>{bary});
    CHECK(cmp.equal);
  }
}

TEST_CASE("span comparison") {
  using Vs = std::vector<RationalVector>;
  auto a = tsl::span_compare(Vs{vec({0, 0})}, Vs{});
  CHECK(a.equal);
  CHECK(a.rank_a == 0);
  CHECK(tsl::span_compare(Vs{vec({1, 1})}, Vs{vec({2, 2})}).equal);
  auto c = tsl::span_compare(Vs{vec({1, 0})}, Vs{vec({1, 1})});
  CHECK_FALSE(c.equal);
  CHECK(c.rank_union == 2);
  CHECK_THROWS_AS(tsl::span_compare(Vs{vec({1, 0})}, Vs{vec({1})}), tsl::Error);
}

TEST_CASE("span theorem on catalog Fanos") {
  for (auto name : fano_names()) {
    auto p = catalog_polytope(name);
    auto data = tsl::toric_polynomials(p);
    auto cmp = tsl::span_compare(tsl::laurent_functionals(data), tsl::ono_vectors(data).ono_vectors);
    CHECK_MESSAGE(cmp.equal, name);
  }
}

TEST_CASE("Reeb cone membership") {
  auto p = catalog_polytope("cp2");
  CHECK(tsl::reeb_direction(p, vec({0, 0, 3})).in_reeb_cone);
  CHECK(tsl::reeb_direction(p, vec({3, 0, 3})).in_reeb_cone);  // (1,0) is a vertex of P
  CHECK_FALSE(tsl::reeb_direction(p, vec({4, 0, 3})).in_reeb_cone);
  CHECK_FALSE(tsl::reeb_direction(p, vec({0, 0, 2})).in_reeb_cone);
  CHECK_THROWS_AS(tsl::reeb_direction(p, vec({0, 3})), tsl::Error);
}
