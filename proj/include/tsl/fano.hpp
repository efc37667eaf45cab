#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tsl/hilbert.hpp"
#include "tsl/obstructions.hpp"
#include "tsl/polytope.hpp"

namespace tsl {

enum class KEVerdict { KE, NotKE };

inline std::string_view to_string(KEVerdict v) { return v == KEVerdict::KE ? "KE" : "NotKE"; }

struct PolytopeSummary {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
  std::size_t facet_count = 0;
  Rational volume;
};

struct FanoReport {
  PolytopeSummary polytope_summary;
  bool is_reflexive = false;
  RationalVector barycenter;
  bool ke_character_vanishes = false;
  bool is_symmetric = false;
  std::size_t automorphism_count = 0;
  std::size_t fixed_space_dim = 0;
  KEVerdict ke_verdict = KEVerdict::NotKE;

  // Filled by chow_obstruction_report only.
  bool chow_obstructed = false;
  std::optional<ObstructionReport> obstruction;
  std::vector<RationalVector> laurent_functionals;
  std::optional<SpanComparison> span_check;

  /// Kaehler-Einstein yet with nonzero obstruction vectors.
  bool ke_but_obstructed() const { return ke_verdict == KEVerdict::KE && chow_obstructed; }
};

/// The anticanonical polytope P* of a smooth Fano fan. Throws NotFano when P* is unbounded,
/// not reflexive, or has a normal fan other than the one given.
LatticePolytope fano_polytope(const Fan& fan);

/// Barycenter, symmetry and the Wang-Zhu verdict (KE iff the barycenter of P* vanishes).
FanoReport ke_report(const Fan& fan);

/// ke_report plus the obstruction vectors of P*, the Laurent functionals and their span
/// comparison.
FanoReport chow_obstruction_report(const Fan& fan, std::size_t order = 0, const EnumerationConfig& config = {});

}  // namespace tsl
