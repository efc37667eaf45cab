#include "tsl/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tsl/error.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

namespace {

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) {
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(), b.normal.end());
  }
  return a.offset < b.offset;
}

Facet normalized(IntegerVector normal, Integer offset) {
  IntegerVector row = std::move(normal);
  row.push_back(std::move(offset));
  row = make_primitive(std::move(row));
  Integer off = row.back();
  row.pop_back();
  return Facet{std::move(row), std::move(off)};
}

void check_dims(const std::vector<RationalVector>& points, std::size_t dim) {
  if (dim == 0) fail(ErrorKind::InvalidInput, "dimension must be at least 1");
  if (points.empty()) fail(ErrorKind::InvalidInput, "empty vertex list");
  for (const auto& p : points) {
    if (p.size() != dim) fail(ErrorKind::InvalidInput, "vertex length differs from dim");
  }
}

void check_dims(const std::vector<Facet>& facets, std::size_t dim) {
  if (dim == 0) fail(ErrorKind::InvalidInput, "dimension must be at least 1");
  if (facets.empty()) fail(ErrorKind::InvalidInput, "empty inequality list");
  for (const auto& f : facets) {
    if (f.normal.size() != dim) fail(ErrorKind::InvalidInput, "inequality normal length differs from dim");
  }
}

}  // namespace

Rational Facet::evaluate(std::span<const Rational> x) const { return dot(normal, x) + Rational(offset); }

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<RationalVector> vertices, std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(facets_.begin(), facets_.end(), facet_less);
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  vertex_facets_.assign(vertices_.size(), {});
  facet_vertices_.assign(facets_.size(), {});
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (facets_[f].evaluate(vertices_[v]) == 0) {
        vertex_facets_[v].push_back(f);
        facet_vertices_[f].push_back(v);
      }
    }
  }
  integral_ = std::all_of(vertices_.begin(), vertices_.end(),
                          [](const RationalVector& v) { return tsl::is_integral(v); });
}

LatticePolytope LatticePolytope::from_vertices(std::vector<RationalVector> points, std::size_t dim) {
  check_dims(points, dim);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (linalg::affine_dimension(points) != static_cast<int>(dim)) {
    fail(ErrorKind::NotFullDimensional, "points do not affinely span R^" + std::to_string(dim));
  }

  std::vector<IntegerVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RationalVector h = p;
    h.emplace_back(1);
    rows.push_back(primitive_integer_multiple(h));
  }
  std::vector<Facet> facets;
  for (auto& ray : linalg::extreme_rays(rows)) {
    Integer offset = ray.back();
    ray.pop_back();
    facets.push_back(normalized(std::move(ray), std::move(offset)));
  }

  std::vector<RationalVector> vertices;
  for (const auto& p : points) {
    std::vector<IntegerVector> tight;
    for (const auto& f : facets) {
      if (f.evaluate(p) == 0) tight.push_back(f.normal);
    }
    if (linalg::rank(std::span<const IntegerVector>(tight)) == dim) vertices.push_back(p);
  }
  return LatticePolytope(dim, std::move(vertices), std::move(facets));
}

LatticePolytope LatticePolytope::from_facets(std::vector<Facet> inequalities, std::size_t dim) {
  check_dims(inequalities, dim);
  std::vector<IntegerVector> normals;
  for (const auto& f : inequalities) normals.push_back(f.normal);
  if (linalg::rank(std::span<const IntegerVector>(normals)) < dim) {
    fail(ErrorKind::Unbounded, "inequality normals do not span R^" + std::to_string(dim));
  }

  std::vector<IntegerVector> rows;
  for (const auto& f : inequalities) {
    IntegerVector row = f.normal;
    row.push_back(f.offset);
    rows.push_back(std::move(row));
  }
  IntegerVector homogenizer(dim + 1, 0);
  homogenizer.back() = 1;
  rows.push_back(homogenizer);

  std::vector<RationalVector> vertices;
  bool recession = false;
  for (const auto& ray : linalg::extreme_rays(rows)) {
    const Integer& t = ray.back();
    if (t == 0) {
      recession = true;
      continue;
    }
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Rational(ray[i], t);
      v[i].canonicalize();
    }
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) fail(ErrorKind::NotFullDimensional, "inequalities define the empty set");
  if (recession) fail(ErrorKind::Unbounded, "inequalities define an unbounded polyhedron");
  return from_vertices(std::move(vertices), dim);
}

LatticePolytope LatticePolytope::from_both(std::vector<RationalVector> points, std::vector<Facet> inequalities,
                                           std::size_t dim) {
  check_dims(points, dim);
  check_dims(inequalities, dim);
  for (const auto& p : points) {
    for (const auto& f : inequalities) {
      if (f.evaluate(p) < 0) fail(ErrorKind::InconsistentInput, "a claimed vertex violates an inequality");
    }
  }
  auto from_v = from_vertices(points, dim);
  auto from_h = from_facets(std::move(inequalities), dim);
  if (from_v.vertices() != from_h.vertices()) {
    fail(ErrorKind::InconsistentInput, "vertex and inequality descriptions define different polytopes");
  }
  return from_h;
}

bool LatticePolytope::contains(std::span<const Rational> x) const {
  if (x.size() != dim_) fail(ErrorKind::DimensionMismatch, "point dimension");
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.evaluate(x) >= 0; });
}

LatticePolytope LatticePolytope::dilated(std::int64_t k) const {
  if (k < 0) fail(ErrorKind::InvalidInput, "dilation factor must be nonnegative");
  std::vector<Facet> facets;
  facets.reserve(facets_.size());
  const Integer factor(static_cast<long>(k));
  for (const auto& f : facets_) facets.push_back(normalized(f.normal, f.offset * factor));
  if (k == 0) return LatticePolytope(dim_, {RationalVector(dim_, 0)}, std::move(facets));
  std::vector<RationalVector> vertices;
  vertices.reserve(vertices_.size());
  for (const auto& v : vertices_) vertices.push_back(scaled(v, Rational(factor)));
  return LatticePolytope(dim_, std::move(vertices), std::move(facets));
}

LatticePolytope LatticePolytope::transformed(const IntegerMatrix& u) const {
  RationalMatrix ur;
  for (const auto& row : u) ur.push_back(to_rational(row));
  if (ur.size() != dim_) fail(ErrorKind::DimensionMismatch, "transformation matrix shape");
  auto inv = linalg::inverse(ur);
  if (!inv) fail(ErrorKind::InvalidInput, "transformation matrix is singular");
  std::vector<RationalVector> vertices;
  for (const auto& v : vertices_) vertices.push_back(linalg::apply(ur, v));
  std::vector<Facet> facets;
  auto inv_t = linalg::transpose(*inv);
  for (const auto& f : facets_) {
    RationalVector row = linalg::apply(inv_t, to_rational(f.normal));
    row.emplace_back(f.offset);
    IntegerVector scaled_row = primitive_integer_multiple(row);
    Integer off = scaled_row.back();
    scaled_row.pop_back();
    facets.push_back(Facet{std::move(scaled_row), std::move(off)});
  }
  return LatticePolytope(dim_, std::move(vertices), std::move(facets));
}

LatticePolytope LatticePolytope::translated(std::span<const Integer> shift) const {
  if (shift.size() != dim_) fail(ErrorKind::DimensionMismatch, "translation length");
  auto shift_q = to_rational(shift);
  std::vector<RationalVector> vertices;
  for (const auto& v : vertices_) vertices.push_back(add(v, shift_q));
  std::vector<Facet> facets;
  for (const auto& f : facets_) {
    Integer off = f.offset;
    for (std::size_t i = 0; i < dim_; ++i) off -= f.normal[i] * shift[i];
    facets.push_back(normalized(f.normal, off));
  }
  return LatticePolytope(dim_, std::move(vertices), std::move(facets));
}

// ---------------------------------------------------------------------------------------
// Fan

namespace {

IntegerMatrix cone_matrix(const std::vector<IntegerVector>& rays, const std::vector<std::size_t>& cone) {
  // Rows are the rays; the determinant is unchanged by transposition.
  IntegerMatrix m;
  for (auto i : cone) m.push_back(rays[i]);
  return m;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntegerVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (dim_ == 0) fail(ErrorKind::InvalidInput, "fan dimension must be at least 1");
  if (rays_.empty()) fail(ErrorKind::InvalidInput, "fan without rays");
  if (max_cones_.empty()) fail(ErrorKind::InvalidInput, "fan without maximal cones");
  for (const auto& r : rays_) {
    if (r.size() != dim_) fail(ErrorKind::InvalidInput, "ray length differs from dim");
    if (gcd_of(r) != 1) fail(ErrorKind::InvalidInput, "ray is not primitive");
  }
  for (auto& cone : max_cones_) {
    if (cone.size() != dim_) fail(ErrorKind::InvalidInput, "maximal cone does not have dim rays");
    for (auto i : cone) {
      if (i >= rays_.size()) fail(ErrorKind::InvalidInput, "maximal cone references a missing ray");
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      fail(ErrorKind::InvalidInput, "maximal cone repeats a ray");
    }
    Integer det = linalg::determinant(cone_matrix(rays_, cone));
    if (abs(det) != 1) fail(ErrorKind::NotSmooth, "maximal cone is not unimodular (|det| = " + Integer(abs(det)).get_str() + ")");
  }

  // Every wall must be shared by exactly two maximal cones lying on opposite sides of it.
  std::map<std::vector<std::size_t>, std::vector<int>> walls;
  for (const auto& cone : max_cones_) {
    for (std::size_t drop = 0; drop < dim_; ++drop) {
      std::vector<std::size_t> wall;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i != drop) wall.push_back(cone[i]);
      }
      IntegerMatrix m = cone_matrix(rays_, wall);
      m.push_back(rays_[cone[drop]]);
      walls[wall].push_back(sgn(linalg::determinant(m)));
    }
  }
  for (const auto& [wall, sides] : walls) {
    if (sides.size() != 2 || sides[0] == sides[1]) {
      fail(ErrorKind::NotComplete, "a wall is not shared by exactly two cones on opposite sides");
    }
  }

  // With consistent walls the covering degree is constant; count it at a generic point.
  std::vector<RationalMatrix> bases;
  for (const auto& cone : max_cones_) {
    RationalMatrix cols(dim_, RationalVector(dim_));
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t i = 0; i < dim_; ++i) cols[i][j] = Rational(rays_[cone[j]][i]);
    }
    bases.push_back(std::move(cols));
  }
  const long primes[] = {1009, 2003, 3001, 4001, 5003, 6007, 7001, 8009};
  for (long p : primes) {
    RationalVector point(dim_);
    Rational x = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      point[i] = (i % 2 == 0 ? x : -x) + Rational(1, static_cast<unsigned long>(i + 2));
      x /= p;
    }
    int covering = 0;
    bool on_boundary = false;
    for (const auto& b : bases) {
      auto coords = linalg::solve(b, point);
      ensure(coords.has_value(), "unimodular cone with singular ray matrix");
      bool inside = true;
      for (const auto& c : *coords) {
        if (c == 0) on_boundary = true;
        if (c <= 0) inside = false;
      }
      if (inside) ++covering;
    }
    if (on_boundary) continue;
    if (covering != 1) fail(ErrorKind::NotComplete, "maximal cones cover a generic point " + std::to_string(covering) + " times");
    return;
  }
  fail(ErrorKind::InvariantViolation, "no generic test point found for the completeness check");
}

LatticePolytope moment_polytope(const Fan& fan) {
  std::vector<Facet> inequalities;
  for (const auto& r : fan.rays()) inequalities.push_back(Facet{r, Integer(1)});
  auto p = LatticePolytope::from_facets(inequalities, fan.dim());
  for (const auto& f : inequalities) {
    if (std::find(p.facets().begin(), p.facets().end(), f) == p.facets().end()) {
      fail(ErrorKind::NotFano, "a ray inequality is redundant; the fan is not the normal fan of P*");
    }
  }
  return p;
}

LatticePolytope dual_polytope(const LatticePolytope& p) {
  if (p.is_point()) fail(ErrorKind::InvalidInput, "dual of a point");
  std::vector<RationalVector> points;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) fail(ErrorKind::InvalidInput, "origin is not in the interior; polar dual undefined");
    RationalVector v;
    for (const auto& n : f.normal) {
      Rational q(n, f.offset);
      q.canonicalize();
      v.push_back(q);
    }
    points.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(std::move(points), p.dim());
}

bool is_reflexive(const LatticePolytope& p) {
  if (p.is_point() || !p.is_integral()) return false;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) return false;
  }
  return dual_polytope(p).is_integral();
}

// ---------------------------------------------------------------------------------------
// Triangulation and integrals

namespace {

void pull(const LatticePolytope& p, const std::vector<std::size_t>& face, int d, std::vector<std::size_t>& prefix,
          std::vector<std::vector<std::size_t>>& out) {
  if (d == 0) {
    auto simplex = prefix;
    simplex.push_back(face.front());
    out.push_back(std::move(simplex));
    return;
  }
  const std::size_t apex = face.front();
  prefix.push_back(apex);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& fv : p.facet_vertices()) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(sub));
    if (sub.size() < static_cast<std::size_t>(d) || sub.size() == face.size()) continue;
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    if (seen.contains(sub)) continue;
    std::vector<RationalVector> pts;
    for (auto i : sub) pts.push_back(p.vertices()[i]);
    if (linalg::affine_dimension(pts) != d - 1) continue;
    seen.insert(sub);
    pull(p, sub, d - 1, prefix, out);
  }
  prefix.pop_back();
}

Rational factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const LatticePolytope& p) {
  if (p.is_point()) return {{0}};
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> prefix;
  std::vector<std::vector<std::size_t>> out;
  pull(p, all, static_cast<int>(p.dim()), prefix, out);
  return out;
}

Measure measure(const LatticePolytope& p) {
  const std::size_t m = p.dim();
  Measure result{0, RationalVector(m, 0), RationalVector(m, 0)};
  if (p.is_point()) {
    result.barycenter = p.vertices().front();
    return result;
  }
  const Rational inv_fact = 1 / factorial(m);
  for (const auto& simplex : triangulate(p)) {
    const auto& v0 = p.vertices()[simplex[0]];
    RationalMatrix edges;
    for (std::size_t i = 1; i < simplex.size(); ++i) edges.push_back(subtract(p.vertices()[simplex[i]], v0));
    Rational vol = abs(linalg::determinant(edges)) * inv_fact;
    result.volume += vol;
    Rational w = vol / static_cast<unsigned long>(m + 1);
    for (auto idx : simplex) {
      const auto& v = p.vertices()[idx];
      for (std::size_t c = 0; c < m; ++c) result.moment[c] += w * v[c];
    }
  }
  for (std::size_t c = 0; c < m; ++c) result.barycenter[c] = result.moment[c] / result.volume;
  return result;
}

// ---------------------------------------------------------------------------------------
// Delzant test

std::vector<std::vector<std::size_t>> vertex_edges(const LatticePolytope& p) {
  const auto& vf = p.vertex_facets();
  const std::size_t n = p.vertices().size();
  std::vector<std::vector<std::size_t>> edges(n);
  if (p.is_point()) return edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(vf[i].begin(), vf[i].end(), vf[j].begin(), vf[j].end(), std::back_inserter(common));
      if (common.size() + 1 < p.dim()) continue;
      std::vector<IntegerVector> normals;
      for (auto f : common) normals.push_back(p.facets()[f].normal);
      if (linalg::rank(std::span<const IntegerVector>(normals)) + 1 == p.dim()) {
        edges[i].push_back(j);
        edges[j].push_back(i);
      }
    }
  }
  return edges;
}

bool is_delzant(const LatticePolytope& p) {
  if (p.is_point() || !p.is_integral()) return false;
  const auto edges = vertex_edges(p);
  const std::size_t m = p.dim();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (edges[i].size() != m) return false;
    IntegerMatrix dirs;
    for (auto j : edges[i]) {
      IntegerVector d;
      for (std::size_t c = 0; c < m; ++c) d.push_back(Rational(p.vertices()[j][c] - p.vertices()[i][c]).get_num());
      dirs.push_back(make_primitive(std::move(d)));
    }
    if (abs(linalg::determinant(dirs)) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------
// Lattice automorphisms

namespace {

struct AutomorphismSearch {
  const LatticePolytope& p;
  std::size_t m;
  std::vector<std::vector<Rational>> fingerprints;
  std::vector<std::vector<std::size_t>> shared;  // facets common to two vertices
  std::vector<std::size_t> basis;
  RationalMatrix basis_inverse;
  std::vector<std::size_t> images;
  std::vector<bool> used;
  std::set<RationalVector> vertex_set;
  std::vector<IntegerMatrix> found;

  // Integer fast path: vertices scaled by their common denominator, B^-1 scaled by its own.
  bool small = false;
  std::vector<std::vector<std::int64_t>> scaled;
  std::map<std::vector<std::int64_t>, std::size_t> scaled_index;
  std::vector<std::vector<std::int64_t>> adj;
  std::int64_t det_scale = 1;
  static constexpr __int128 kOverflow = __int128{1} << 62;

  explicit AutomorphismSearch(const LatticePolytope& poly) : p(poly), m(poly.dim()) {
    const auto& verts = p.vertices();
    const auto& vf = p.vertex_facets();
    const std::size_t n = verts.size();
    vertex_set.insert(verts.begin(), verts.end());
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Rational> fp;
      for (auto f : vf[v]) {
        const auto& facet = p.facets()[f];
        Rational lattice_offset(facet.offset, gcd_of(facet.normal));
        lattice_offset.canonicalize();
        fp.push_back(lattice_offset);
      }
      std::sort(fp.begin(), fp.end());
      fingerprints.push_back(std::move(fp));
    }
    shared.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> common;
        std::set_intersection(vf[a].begin(), vf[a].end(), vf[b].begin(), vf[b].end(), std::back_inserter(common));
        shared[a][b] = common.size();
      }
    }

    // Basis of R^m from vertices, preferring rare fingerprints to narrow the branching.
    std::map<std::vector<Rational>, std::size_t> class_size;
    for (const auto& fp : fingerprints) ++class_size[fp];
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return class_size[fingerprints[a]] < class_size[fingerprints[b]];
    });
    std::vector<RationalVector> chosen;
    for (auto v : order) {
      if (basis.size() == m) break;
      chosen.push_back(verts[v]);
      if (linalg::rank(std::span<const RationalVector>(chosen)) == chosen.size()) {
        basis.push_back(v);
      } else {
        chosen.pop_back();
      }
    }
    ensure(basis.size() == m, "vertices of a full-dimensional polytope must span R^m");
    RationalMatrix cols(m, RationalVector(m));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) cols[i][j] = verts[basis[j]][i];
    }
    basis_inverse = *linalg::inverse(cols);
    used.assign(n, false);
    prepare_small();
  }

  void prepare_small() {
    constexpr std::int64_t kLimit = std::int64_t{1} << 20;
    const auto& verts = p.vertices();
    Integer denom = 1;
    for (const auto& v : verts) {
      for (const auto& c : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer inv_denom = 1;
    for (const auto& row : basis_inverse) {
      for (const auto& c : row) mpz_lcm(inv_denom.get_mpz_t(), inv_denom.get_mpz_t(), c.get_den_mpz_t());
    }
    if (abs(denom) >= kLimit || abs(inv_denom) >= kLimit) return;
    for (const auto& v : verts) {
      std::vector<std::int64_t> w;
      for (const auto& c : v) {
        const Integer z = Rational(c * denom).get_num();
        if (abs(z) >= kLimit) return;
        w.push_back(z.get_si());
      }
      scaled_index.emplace(w, scaled.size());
      scaled.push_back(std::move(w));
    }
    adj.assign(m, std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Integer z = Rational(basis_inverse[i][j] * inv_denom).get_num();
        if (abs(z) >= kLimit) return;
        adj[i][j] = z.get_si();
      }
    }
    det_scale = inv_denom.get_si() * denom.get_si();
    small = true;
  }

  // u = (scaled images) . adj / det_scale, which must be integral and permute the vertices.
  bool small_leaf() {
    const auto& verts = p.vertices();
    std::vector<std::vector<std::int64_t>> u(m, std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        __int128 acc = 0;
        for (std::size_t l = 0; l < m; ++l) acc += static_cast<__int128>(scaled[images[l]][i]) * adj[l][j];
        if (acc % det_scale != 0) return false;
        u[i][j] = static_cast<std::int64_t>(acc / det_scale);
      }
    }
    std::vector<bool> hit(verts.size(), false);
    std::vector<std::int64_t> image(m);
    for (const auto& v : scaled) {
      for (std::size_t i = 0; i < m; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += static_cast<__int128>(u[i][j]) * v[j];
        if (acc >= kOverflow || acc <= -kOverflow) return false;
        image[i] = static_cast<std::int64_t>(acc);
      }
      auto it = scaled_index.find(image);
      if (it == scaled_index.end() || hit[it->second]) return false;
      hit[it->second] = true;
    }
    IntegerMatrix ui(m, IntegerVector(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) ui[i][j] = static_cast<long>(u[i][j]);
    }
    found.push_back(std::move(ui));
    return true;
  }

  void run() { extend(); }

  void extend() {
    const auto& verts = p.vertices();
    if (images.size() == m && small) {
      small_leaf();
      return;
    }
    if (images.size() == m) {
      RationalMatrix img(m, RationalVector(m));
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) img[i][j] = verts[images[j]][i];
      }
      RationalMatrix u = linalg::multiply(img, basis_inverse);
      IntegerMatrix ui(m, IntegerVector(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (u[i][j].get_den() != 1) return;
          ui[i][j] = u[i][j].get_num();
        }
      }
      if (abs(linalg::determinant(ui)) != 1) return;
      for (const auto& v : verts) {
        if (!vertex_set.contains(linalg::apply(u, v))) return;
      }
      found.push_back(std::move(ui));
      return;
    }
    const std::size_t pos = images.size();
    const std::size_t src = basis[pos];
    for (std::size_t cand = 0; cand < verts.size(); ++cand) {
      if (used[cand] || fingerprints[cand] != fingerprints[src]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) ok = shared[basis[q]][src] == shared[images[q]][cand];
      if (!ok) continue;
      used[cand] = true;
      images.push_back(cand);
      extend();
      images.pop_back();
      used[cand] = false;
    }
  }
};

}  // namespace

SymmetryReport symmetry_report(const LatticePolytope& p) {
  if (p.is_point()) fail(ErrorKind::InvalidInput, "symmetry report of a point");
  AutomorphismSearch search(p);
  search.run();
  SymmetryReport report;
  report.automorphisms = std::move(search.found);
  std::sort(report.automorphisms.begin(), report.automorphisms.end());
  const std::size_t m = p.dim();
  std::set<IntegerVector> rows;
  for (const auto& u : report.automorphisms) {
    for (std::size_t i = 0; i < m; ++i) {
      IntegerVector row = u[i];
      row[i] -= 1;
      rows.insert(std::move(row));
    }
  }
  const std::vector<IntegerVector> stacked(rows.begin(), rows.end());
  report.fixed_space_dim = m - linalg::rank(std::span<const IntegerVector>(stacked));
  report.is_symmetric = report.fixed_space_dim == 0;
  return report;
}

}  // namespace tsl
