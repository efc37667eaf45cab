#include "tsl/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include "tsl/error.hpp"

namespace tsl::linalg {

namespace {

IntegerMatrix integer_rows(std::span<const RationalVector> rows) {
  IntegerMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(primitive_integer_multiple(r));
  return out;
}

std::size_t bareiss_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(std::span<const IntegerVector> rows) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix in rank computation");
  }
  return bareiss_rank(IntegerMatrix(rows.begin(), rows.end()));
}

std::size_t rank(std::span<const RationalVector> rows) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix in rank computation");
  }
  return bareiss_rank(integer_rows(rows));
}

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
  return static_cast<int>(rank(diffs));
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m) {
    if (r.size() != n) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  }
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].size() != n) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) fail(ErrorKind::DimensionMismatch, "solve: right-hand side length");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n, 0);
    e[j] = 1;
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    cols[j] = std::move(*x);
  }
  return transpose(cols);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RationalMatrix out(a.size(), RationalVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalVector apply(const RationalMatrix& a, std::span<const Rational> x) {
  RationalVector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix out(a.front().size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix out(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

namespace {

Integer integer_dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ray {
  IntegerVector coords;
  boost::dynamic_bitset<> zeros;
};

}  // namespace

std::vector<IntegerVector> extreme_rays(std::span<const IntegerVector> rows) {
  if (rows.empty()) fail(ErrorKind::Unbounded, "cone without constraints");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::DimensionMismatch, "ragged constraint matrix");
  }

  // Greedy choice of n independent rows: the initial simplicial cone.
  std::vector<std::size_t> basis;
  std::vector<IntegerVector> chosen;
  for (std::size_t i = 0; i < rows.size() && basis.size() < n; ++i) {
    chosen.push_back(rows[i]);
    if (rank(std::span<const IntegerVector>(chosen)) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() < n) fail(ErrorKind::Unbounded, "constraint matrix is rank deficient; the cone is not pointed");

  RationalMatrix a_b;
  for (auto i : basis) a_b.push_back(to_rational(rows[i]));
  auto inv = inverse(a_b);
  ensure(inv.has_value(), "double description: basis matrix not invertible");

  const std::size_t total = rows.size();
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = (*inv)[i][j];
    Ray ray{primitive_integer_multiple(col), boost::dynamic_bitset<>(total)};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) ray.zeros.set(basis[k]);
    }
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> in_basis(total);
  for (auto i : basis) in_basis.set(i);

  for (std::size_t i = 0; i < total; ++i) {
    if (in_basis.test(i)) continue;
    std::vector<Integer> values;
    values.reserve(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values.push_back(integer_dot(rows[i], rays[r].coords));
      const int s = sgn(values.back());
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s >= 0) {
        Ray kept = rays[r];
        if (s == 0) kept.zeros.set(i);
        next.push_back(std::move(kept));
      }
    }
    if (neg.empty()) {
      rays = std::move(next);
      continue;
    }
    for (auto p : pos) {
      for (auto q : neg) {
        auto common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector combined(n);
        for (std::size_t k = 0; k < n; ++k) {
          combined[k] = values[p] * rays[q].coords[k] - values[q] * rays[p].coords[k];
        }
        common.set(i);
        next.push_back(Ray{make_primitive(std::move(combined)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntegerVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace tsl::linalg
