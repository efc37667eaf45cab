#include "tsl/fano.hpp"

#include <algorithm>

#include "tsl/error.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

LatticePolytope fano_polytope(const Fan& fan) {
  std::optional<LatticePolytope> p;
  try {
    p = moment_polytope(fan);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unbounded || e.kind() == ErrorKind::NotFullDimensional) {
      fail(ErrorKind::NotFano, std::string("moment polytope is not a bounded polytope: ") + e.what());
    }
    throw;
  }
  if (!is_reflexive(*p)) fail(ErrorKind::NotFano, "moment polytope is not reflexive");

  // Each maximal cone must correspond to the vertex cut out by its own rays.
  const auto& rays = fan.rays();
  for (const auto& cone : fan.max_cones()) {
    RationalMatrix a;
    for (auto i : cone) a.push_back(to_rational(rays[i]));
    auto w = linalg::solve(a, RationalVector(fan.dim(), Rational(-1)));
    ensure(w.has_value(), "unimodular cone with singular ray matrix");
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (std::find(cone.begin(), cone.end(), j) != cone.end()) continue;
      if (dot(rays[j], *w) <= -1) fail(ErrorKind::NotFano, "maximal cone does not match a vertex of P*");
    }
  }
  return *p;
}

FanoReport ke_report(const Fan& fan) {
  const LatticePolytope p = fano_polytope(fan);
  FanoReport r;
  const Measure mu = measure(p);
  r.polytope_summary = PolytopeSummary{p.dim(), p.vertices(), p.facets().size(), mu.volume};
  r.is_reflexive = true;
  r.barycenter = mu.barycenter;
  r.ke_character_vanishes = is_zero(mu.barycenter);
  const SymmetryReport sym = symmetry_report(p);
  r.is_symmetric = sym.is_symmetric;
  r.automorphism_count = sym.automorphisms.size();
  r.fixed_space_dim = sym.fixed_space_dim;
  r.ke_verdict = r.ke_character_vanishes ? KEVerdict::KE : KEVerdict::NotKE;
  ensure(!r.is_symmetric || r.ke_character_vanishes, "symmetric polytope with nonzero barycenter");
  return r;
}

FanoReport chow_obstruction_report(const Fan& fan, std::size_t order, const EnumerationConfig& config) {
  FanoReport r = ke_report(fan);
  const LatticePolytope p = fano_polytope(fan);
  const ToricPolynomials data = toric_polynomials(p, config);
  r.obstruction = ono_vectors(data);
  r.chow_obstructed = r.obstruction->rank > 0;
  r.laurent_functionals = laurent_functionals(data, order);
  r.span_check = span_compare(r.laurent_functionals, r.obstruction->ono_vectors);
  ensure(!r.is_symmetric || r.obstruction->all_zero, "symmetric polytope with nonzero obstruction vectors");
  return r;
}

}  // namespace tsl
