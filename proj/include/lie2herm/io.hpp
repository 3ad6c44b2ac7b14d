#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie2herm/algebra.hpp"

namespace lie2herm {

// In-memory image of the structured-text algebra format (see the README for
// the grammar). Indices are 1-based in the file and in this struct; only
// i < j bracket pairs may appear.
struct AlgebraFile {
  struct BracketRow {
    int i = 0, j = 0;                           // 1-based, i < j
    std::vector<std::pair<int, double>> coeffs; // (k, value), 1-based k
  };

  int dim = 0;
  std::vector<BracketRow> brackets;
  std::optional<Mat> metric; // default identity
  std::optional<Mat> J;
  std::optional<Vec> hint_e1, hint_e2;
};

AlgebraFile parse_algebra_file(const std::string& text); // ParseError
AlgebraFile load_algebra_file(const std::string& path);  // ParseError (also for unreadable files)
std::string serialize_algebra_file(const AlgebraFile& file);

MetricLieAlgebra to_algebra(const AlgebraFile& file); // dims checked
AlgebraFile from_algebra(const MetricLieAlgebra& L,
                         const std::optional<Mat>& J = std::nullopt,
                         const std::optional<std::pair<Vec, Vec>>& hints = std::nullopt);

} // namespace lie2herm
