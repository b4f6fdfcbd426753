#include "charlab/catalog.hpp"

#include "charlab/dsl.hpp"

namespace charlab {

std::vector<CatalogEntry> catalog_from_exprs(
    const std::vector<std::string>& exprs) {
  std::vector<CatalogEntry> out;
  out.reserve(exprs.size());
  for (const auto& expr : exprs) out.push_back({expr, evaluate_group(expr)});
  return out;
}

std::vector<CatalogEntry> default_catalog() {
  // structurally rich families first so that instance caps spread mining
  // across the whole catalog before truncation
  std::vector<std::string> exprs{
      "D(8) x C(2)", "Q(8)",          "S(3)",
      "S(4)",        "A(4)",          "SL(2,3)",
      "F(21)",       "C(3) wr C(2)",  "(C(3) wr C(2)) x C(2)",
      "Q(8) x C(2)", "C(4) x C(2)",   "A(5)",
  };
  for (int n = 2; n <= 12; ++n)
    exprs.push_back("D(" + std::to_string(2 * n) + ")");
  for (int n = 1; n <= 24; ++n) exprs.push_back("C(" + std::to_string(n) + ")");
  return catalog_from_exprs(exprs);
}

} // namespace charlab
