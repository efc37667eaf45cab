#pragma once

#include <cstdint>
#include <vector>

#include "tsl/polytope.hpp"

namespace tsl {

struct EnumerationConfig {
  static constexpr std::uint64_t kDefaultBudget = 50'000'000;

  /// Hard cap on candidates: every coordinate value tried at every level. When only counting,
  /// the fibre over the last two coordinates is summed in closed form and costs one candidate.
  std::uint64_t budget = kDefaultBudget;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Default config with TSL_BUDGET applied when set.
  static EnumerationConfig from_environment();
};

struct LatticeStats {
  Integer count;
  IntegerVector coordinate_sum;
  std::uint64_t candidates = 0;
};

/// Lattice points of the dilations kP. Construction precomputes, for every prefix length d,
/// the facet system of the projection of P onto the first d coordinates (Fourier-Motzkin
/// elimination filtered down to facets of the projection), so each coordinate is bounded by
/// the exact fibre interval over the prefix already chosen. Dilation only rescales offsets.
class LatticeEnumerator {
 public:
  explicit LatticeEnumerator(const LatticePolytope& p);

  std::size_t dim() const { return dim_; }

  /// Count and coordinate sum of kP intersected with Z^m. k = 0 gives {0}. The last two
  /// coordinates are summed in closed form with floor sums over the binding facet pair.
  LatticeStats stats(std::int64_t k, const EnumerationConfig& config = {}) const;

  /// All lattice points of kP in lexicographic order.
  std::vector<LatticePoint> points(std::int64_t k, const EnumerationConfig& config = {}) const;

  struct Row {
    std::vector<std::int64_t> normal;  // coefficients of x_0..x_d
    std::int64_t offset;               // scaled by k at use
  };

  /// Projection system used to bound x_d; exposed for tests.
  const std::vector<Row>& level_system(std::size_t d) const { return levels_[d]; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Row>> levels_;
};

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, const EnumerationConfig& config = {});

/// For F(i) = floor((a i + b) / c) with c > 0: f = sum F(i), g = sum i F(i), h = sum F(i)^2
/// over i = 0..n, in O(log) steps.
struct FloorSums {
  __int128 f = 0;
  __int128 g = 0;
  __int128 h = 0;
};
FloorSums floor_sums(__int128 a, __int128 b, __int128 c, __int128 n);

}  // namespace tsl
