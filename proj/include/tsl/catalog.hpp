#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsl/io.hpp"

namespace tsl {

enum class EntryKind { Fan, Polytope, Bundle };

std::string_view to_string(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  io::Json data;
  std::string provenance;
};

/// Embedded entries, in a fixed order.
const std::vector<CatalogEntry>& load_catalog();

/// Throws NotFound for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace tsl
