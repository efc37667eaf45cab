#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

struct LatticePoint {
  std::vector<std::int64_t> coords;

  std::size_t dim() const { return coords.size(); }
  auto operator<=>(const LatticePoint&) const = default;
};

/// The closed half-space normal . x + offset >= 0. Stored with gcd(normal, offset) = 1.
struct Facet {
  IntegerVector normal;
  Integer offset;

  Rational evaluate(std::span<const Rational> x) const;
  bool operator==(const Facet&) const = default;
};

/// A full-dimensional polytope in R^m holding both its vertex and facet descriptions.
/// Vertices may be rational (dual polytopes); `is_integral()` gates the lattice-theoretic
/// operations. The only non-full-dimensional value is the zero dilation {0}, which
/// `dilate(P, 0)` produces so that lattice counts have a node at k = 0.
class LatticePolytope {
 public:
  static LatticePolytope from_vertices(std::vector<RationalVector> points, std::size_t dim);
  static LatticePolytope from_facets(std::vector<Facet> inequalities, std::size_t dim);
  /// Both descriptions supplied: each is checked against the other.
  static LatticePolytope from_both(std::vector<RationalVector> points, std::vector<Facet> inequalities,
                                   std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Indices of facets through each vertex.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }
  /// Indices of vertices on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

  bool is_integral() const { return integral_; }
  bool is_point() const { return vertices_.size() == 1; }
  bool contains(std::span<const Rational> x) const;

  /// The polytope scaled by k >= 0 about the origin.
  LatticePolytope dilated(std::int64_t k) const;
  /// The polytope x -> U x for an invertible integer matrix U.
  LatticePolytope transformed(const IntegerMatrix& u) const;
  LatticePolytope translated(std::span<const Integer> shift) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  LatticePolytope(std::size_t dim, std::vector<RationalVector> vertices, std::vector<Facet> facets);

  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  bool integral_ = false;
};

inline LatticePolytope dilate(const LatticePolytope& p, std::int64_t k) { return p.dilated(k); }

/// Fan of a smooth complete toric variety: primitive rays and maximal cones of size m.
class Fan {
 public:
  /// Validates primitivity, smoothness (unimodular maximal cones) and completeness.
  Fan(std::size_t dim, std::vector<IntegerVector> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t dim() const { return dim_; }
  const std::vector<IntegerVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }

 private:
  std::size_t dim_;
  std::vector<IntegerVector> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
};

struct Measure {
  Rational volume;
  RationalVector moment;
  RationalVector barycenter;
};

struct SymmetryReport {
  std::vector<IntegerMatrix> automorphisms;
  std::size_t fixed_space_dim = 0;
  bool is_symmetric = false;
};

/// P* = {w : v_j . w >= -1 for every ray v_j}.
LatticePolytope moment_polytope(const Fan& fan);

/// Polar dual {y : w . y >= -1 for all w in P}; requires the origin in the interior.
LatticePolytope dual_polytope(const LatticePolytope& p);

Measure measure(const LatticePolytope& p);

/// Simplices of the pulling triangulation used by `measure`, as vertex-index tuples.
std::vector<std::vector<std::size_t>> triangulate(const LatticePolytope& p);

bool is_delzant(const LatticePolytope& p);

/// Neighbouring vertices of each vertex along edges.
std::vector<std::vector<std::size_t>> vertex_edges(const LatticePolytope& p);

SymmetryReport symmetry_report(const LatticePolytope& p);

/// P is integral, contains the origin in its interior, and its polar dual is integral.
bool is_reflexive(const LatticePolytope& p);

}  // namespace tsl
