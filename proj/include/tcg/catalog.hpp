#pragma once

#include <string>
#include <vector>

#include "tcg/finite_group.hpp"

namespace tcg {

struct CatalogEntry {
  std::string spec;
  FiniteGroup group;
};

/// The fixed sweep catalog: every non-abelian constructor output used by the
/// verification suites, filtered to the given order bound. Deterministic
/// order (sorted by spec string).
std::vector<CatalogEntry> build_catalog(int max_order);

}  // namespace tcg
