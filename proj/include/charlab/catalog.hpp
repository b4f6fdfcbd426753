#pragma once

#include <string>
#include <vector>

#include "charlab/group.hpp"

namespace charlab {

struct CatalogEntry {
  std::string expr;
  GroupPtr group;
};

/// The built-in catalog: cyclic groups up to C(24), dihedral groups up to
/// D(24), Q8, S3, S4, A4, A5, SL(2,3), F(21), the wreath product C3 wr C2,
/// and the D8 x C2 / Q8 x C2 / C4 x C2 / (C3 wr C2) x C2 families.
std::vector<CatalogEntry> default_catalog();

/// Evaluates a list of expression strings into catalog entries.
std::vector<CatalogEntry> catalog_from_exprs(const std::vector<std::string>& exprs);

} // namespace charlab
