#pragma once

// Independent reference computations for the test suites. Nothing here shares code with the
// enumerator, the interpolation or the Laurent expansion under test.

#include <algorithm>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tsl/polytope.hpp"

namespace oracle {

using tsl::Integer;
using tsl::Rational;

struct BoxStats {
  Integer count = 0;
  std::vector<Integer> sum;
};

/// Scans the full integer bounding box of kP and tests every facet inequality.
inline BoxStats box_scan(const tsl::LatticePolytope& p, long k) {
  const std::size_t m = p.dim();
  std::vector<long> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    Rational a = mn * k, b = mx * k;
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    lo[i] = f.get_si();
    hi[i] = c.get_si();
  }
  BoxStats out;
  out.sum.assign(m, 0);
  std::vector<long> x = lo;
  while (true) {
    bool inside = true;
    for (const auto& facet : p.facets()) {
      Integer acc = facet.offset * k;
      for (std::size_t i = 0; i < m; ++i) acc += facet.normal[i] * x[i];
      if (acc < 0) {
        inside = false;
        break;
      }
    }
    if (inside) {
      out.count += 1;
      for (std::size_t i = 0; i < m; ++i) out.sum[i] += x[i];
    }
    std::size_t d = 0;
    while (d < m && x[d] == hi[d]) {
      x[d] = lo[d];
      ++d;
    }
    if (d == m) break;
    ++x[d];
  }
  return out;
}

inline Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Integer matrices with determinant +-1 built from random elementary operations.
inline tsl::IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t m, int steps = 3) {
  tsl::IntegerMatrix u(m, tsl::IntegerVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  if (m == 1) {
    if (rng() % 2) u[0][0] = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    int c = coef(rng);
    for (std::size_t j = 0; j < m; ++j) u[a][j] += c * u[b][j];
  }
  if (rng() % 2) {
    std::size_t a = pick(rng), b = pick(rng);
    std::swap(u[a], u[b]);
  }
  return u;
}

inline std::vector<tsl::RationalVector> box_vertices(const std::vector<long>& size) {
  const std::size_t m = size.size();
  std::vector<tsl::RationalVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    tsl::RationalVector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = (mask >> i) & 1 ? size[i] : 0;
    out.push_back(v);
  }
  return out;
}

/// A random Delzant polytope of dimension m with vertex coordinates in [-bound, bound]:
/// a box, a dilated simplex, a simplex-times-segment prism or a box with one corner chopped,
/// moved by a random unimodular map and translation.
inline tsl::LatticePolytope random_delzant(std::mt19937_64& rng, std::size_t m, long bound = 3) {
  std::uniform_int_distribution<long> len(1, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<tsl::RationalVector> verts;
    const int shape = static_cast<int>(rng() % 4);
    if (shape == 0 || m == 1) {
      std::vector<long> size(m);
      for (auto& s : size) s = len(rng);
      verts = box_vertices(size);
    } else if (shape == 1) {
      const long a = len(rng);
      verts.push_back(tsl::RationalVector(m, 0));
      for (std::size_t i = 0; i < m; ++i) {
        tsl::RationalVector v(m, 0);
        v[i] = a;
        verts.push_back(v);
      }
    } else if (shape == 2) {
      // (a * (m-1)-simplex) x [0, b]
      const long a = len(rng), b = len(rng);
      std::vector<tsl::RationalVector> base{tsl::RationalVector(m - 1, 0)};
      for (std::size_t i = 0; i + 1 < m; ++i) {
        tsl::RationalVector v(m - 1, 0);
        v[i] = a;
        base.push_back(v);
      }
      for (const auto& v : base) {
        for (long h : {0L, b}) {
          auto w = v;
          w.push_back(h);
          verts.push_back(w);
        }
      }
    } else {
      // Box with sides >= 2 and the corner at the origin cut by sum x >= 1.
      std::vector<long> size(m);
      for (auto& s : size) s = 1 + len(rng);
      for (auto v : box_vertices(size)) {
        if (tsl::is_zero(v)) {
          for (std::size_t i = 0; i < m; ++i) {
            tsl::RationalVector e(m, 0);
            e[i] = 1;
            verts.push_back(e);
          }
        } else {
          verts.push_back(v);
        }
      }
    }
    auto p = tsl::LatticePolytope::from_vertices(verts, m).transformed(random_unimodular(rng, m));
    std::uniform_int_distribution<long> shift(-bound, bound);
    tsl::IntegerVector t(m);
    for (auto& x : t) x = shift(rng);
    p = p.translated(t);
    bool fits = true;
    for (const auto& v : p.vertices()) {
      for (const auto& x : v) fits = fits && abs(x) <= bound;
    }
    if (fits) return p;
  }
  throw std::runtime_error("random_delzant: no polytope fits the coordinate bound");
}

using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

/// sum_{k >= 0} k^j e^{-lambda k t}, summed directly until the terms drop below 2^-210
/// relative to the partial sum.
inline Float power_sum_numeric(unsigned j, const Float& lambda, const Float& t) {
  const Float ratio = exp(-lambda * t);
  Float weight = 1;  // e^{-lambda k t}
  Float total = 0;
  const Float eps = ldexp(Float(1), -210);
  for (long k = 0;; ++k) {
    const Float term = pow(Float(k), j) * weight;
    total += term;
    if (k > static_cast<long>(j) + 1 && term < eps * total) break;
    weight *= ratio;
  }
  return total;
}

inline Float to_float(const Rational& q) {
  return Float(q.get_num().get_str()) / Float(q.get_den().get_str());
}

}  // namespace oracle
