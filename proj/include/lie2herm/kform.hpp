#pragma once

#include <array>
#include <span>
#include <vector>

#include "lie2herm/linalg.hpp"

namespace lie2herm {

class MetricLieAlgebra;

// Alternating k-form on R^n (k = 2, 3 or 4), stored as one coefficient per
// strictly increasing index tuple. Accessors accept indices in any order and
// apply the permutation sign; repeated indices read as 0.
class KForm {
public:
  KForm(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  double get(std::span<const int> idx) const;
  double get(std::initializer_list<int> idx) const {
    return get(std::span<const int>(idx.begin(), idx.size()));
  }
  // Sets the coefficient of the tuple (overwrites, no accumulation). The
  // stored value for the sorted tuple is sign(perm) * value.
  void set(std::span<const int> idx, double value);
  void set(std::initializer_list<int> idx, double value) {
    set(std::span<const int>(idx.begin(), idx.size()), value);
  }

  // Full evaluation on k coordinate vectors: sum over increasing tuples I of
  // coeff(I) * det of the k x k minor the vectors span on I.
  double evaluate(const std::vector<Vec>& args) const;

  double max_abs() const;

  // Canonical storage, exposed for iteration: tuples()[t] is increasing and
  // padded with -1 beyond degree(); values()[t] is its coefficient.
  const std::vector<std::array<int, 4>>& tuples() const { return tuples_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

private:
  int dim_;
  int degree_;
  std::vector<std::array<int, 4>> tuples_;
  std::vector<double> values_;
  std::vector<int> slot_; // sorted-tuple -> storage index, -1 padded keys

  int slot_index(const std::array<int, 4>& sorted) const;
};

// Differential of a left-invariant form determined by the Lie bracket:
//   (d a)(x0..xk) = sum_{i<j} (-1)^{i+j} a([xi,xj], x0.. without xi,xj ..xk).
// Accepts degree 2 or 3 (the result has degree 3 or 4).
KForm exterior_derivative(const KForm& form, const MetricLieAlgebra& L);

} // namespace lie2herm
