#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie2herm/algebra.hpp"
#include "lie2herm/hermitian.hpp"

namespace lie2herm {

// Expected metadata recorded with a fixture. `verdict` is absent for entries
// outside the classification scope (the mixed fixture); `dc_top` only for
// 4-dimensional entries.
struct CatalogExpected {
  JType type = JType::TypeI;
  std::optional<Verdict> verdict;
  std::optional<double> dc_top;
};

struct CatalogEntry {
  std::string name;
  MetricLieAlgebra algebra;
  std::optional<Mat> J;
  CatalogExpected expected;
  std::optional<std::pair<Vec, Vec>> hints; // (e1, e2) frame fixing the split
};

// Deterministic listing of the fixture names.
std::vector<std::string> catalog_names();

// Fixture by name; UnknownNameError for anything not in catalog_names().
CatalogEntry catalog_get(const std::string& name);

} // namespace lie2herm
