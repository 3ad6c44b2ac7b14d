#pragma once

#include <vector>

#include "lie2herm/linalg.hpp"

namespace lie2herm {

// Finite-dimensional real Lie algebra with a fixed inner product, both given
// in one ambient basis b_0..b_{n-1}. Structure constants C(i,j,k) mean
// [b_i, b_j] = sum_k C(i,j,k) b_k; the metric G is symmetric positive
// definite. Antisymmetry and Jacobi are *not* enforced by set_bracket (only
// checked by validate()), so deliberately broken inputs can be represented.
class MetricLieAlgebra {
public:
  // Abelian algebra with the standard inner product.
  explicit MetricLieAlgebra(int n);
  // Raw constructor; checks shapes and that G is symmetric positive definite.
  MetricLieAlgebra(Tensor3 C, Mat G);

  // Sets [b_i, b_j] = coeffs (and the antisymmetric mirror). Indices 0-based.
  void set_bracket(int i, int j, const Vec& coeffs);

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;

  int dim() const { return n_; }
  const Mat& metric() const { return G_; }
  const Tensor3& structure_constants() const { return C_; }
  Tensor3& structure_constants() { return C_; }

  double inner(const Vec& x, const Vec& y) const { return lie2herm::inner(x, y, G_); }
  double norm(const Vec& x) const;

private:
  int n_;
  Tensor3 C_;
  Mat G_;
};

struct ValidationReport {
  double antisymmetry_residual = 0.0; // max_k |C(i,j,k) + C(j,i,k)|
  double jacobi_residual = 0.0;       // max-abs of the cyclic Jacobi sum
  bool ok = false;
};

ValidationReport validate(const MetricLieAlgebra& L);

// Orthonormal basis of the derived algebra g' = span{[b_i,b_j]}, built by
// Gram-Schmidt over the bracket images in lexicographic (i,j) order with
// dependent images dropped.
std::vector<Vec> derived_algebra(const MetricLieAlgebra& L);

} // namespace lie2herm
