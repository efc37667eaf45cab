#pragma once

#include <initializer_list>
#include <vector>

#include "tsl/catalog.hpp"
#include "tsl/io.hpp"
#include "tsl/polytope.hpp"

namespace testing {

using tsl::Integer;
using tsl::Rational;
using tsl::RationalVector;

inline Rational q(const char* text) { return tsl::parse_rational(text); }

inline RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<RationalVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(vec(r));
  return out;
}

inline tsl::LatticePolytope poly(std::initializer_list<std::initializer_list<long>> verts) {
  auto vs = vecs(verts);
  return tsl::LatticePolytope::from_vertices(vs, vs.front().size());
}

inline tsl::Fan catalog_fan(const char* name) { return tsl::io::fan_from_json(tsl::catalog_entry(name).data); }

inline tsl::LatticePolytope catalog_polytope(const char* name) {
  const auto& e = tsl::catalog_entry(name);
  if (e.kind == tsl::EntryKind::Fan) return tsl::moment_polytope(tsl::io::fan_from_json(e.data));
  return tsl::io::polytope_from_json(e.data);
}

inline const std::vector<const char*>& fano_names() {
  static const std::vector<const char*> names{"cp1", "cp2", "cp1xcp1", "hirzebruch-f1", "dp2", "dp3"};
  return names;
}

}  // namespace testing
