#include "tsl/catalog.hpp"

#include "tsl/error.hpp"

namespace tsl {

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Fan: return "fan";
    case EntryKind::Polytope: return "polytope";
    case EntryKind::Bundle: return "bundle";
  }
  return "unknown";
}

namespace {

struct RawEntry {
  const char* name;
  EntryKind kind;
  const char* data;
  const char* provenance;
};

constexpr RawEntry kRaw[] = {
    {"cp1", EntryKind::Fan, R"({"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})",
     "fan of the projective line"},
    {"cp2", EntryKind::Fan, R"({"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]})",
     "fan of the projective plane"},
    {"cp1xcp1", EntryKind::Fan,
     R"({"dim": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]], "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]})",
     "product fan of two projective lines"},
    {"hirzebruch-f1", EntryKind::Fan,
     R"({"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1], [1, 1]], "max_cones": [[0, 3], [3, 1], [1, 2], [2, 0]]})",
     "plane blown up at one torus-fixed point (del Pezzo of degree 8)"},
    {"dp2", EntryKind::Fan,
     R"({"dim": 2, "rays": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1]],
         "max_cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]})",
     "plane blown up at two torus-fixed points (del Pezzo of degree 7)"},
    {"dp3", EntryKind::Fan,
     R"({"dim": 2, "rays": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
         "max_cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]]})",
     "plane blown up at three torus-fixed points (del Pezzo of degree 6)"},
    {"unit-simplex-1", EntryKind::Polytope, R"({"dim": 1, "vertices": [[0], [1]]})", "standard 1-simplex"},
    {"unit-simplex-2", EntryKind::Polytope, R"({"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]})",
     "standard 2-simplex"},
    {"unit-simplex-3", EntryKind::Polytope,
     R"({"dim": 3, "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]})", "standard 3-simplex"},
    {"segment-0-2", EntryKind::Polytope, R"({"dim": 1, "vertices": [[0], [2]]})",
     "segment [0, 2]; the projective line with O(2)"},
    {"bundle-equal-slopes", EntryKind::Bundle,
     R"({"genus": 2, "twist_r": 1, "deg_B": 0,
         "components": [{"rank": 1, "degree": 1, "weight": "5"}, {"rank": 1, "degree": 1, "weight": "7"}]})",
     "two line bundles of equal slope over a genus 2 curve"},
    {"bundle-split-g2", EntryKind::Bundle,
     R"({"genus": 2, "twist_r": 1, "deg_B": -2,
         "components": [{"rank": 1, "degree": 0, "weight": "1"}, {"rank": 1, "degree": 1, "weight": "-1"}]})",
     "split rank 2 bundle O + O(p) over a genus 2 curve, polarized by O(1) twisted by degree -2"},
};

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (const auto& raw : kRaw) out.push_back(CatalogEntry{raw.name, raw.kind, io::parse(raw.data), raw.provenance});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : load_catalog()) {
    if (e.name == name) return e;
  }
  fail(ErrorKind::NotFound, "no catalog entry named \"" + std::string(name) + "\"");
}

}  // namespace tsl
