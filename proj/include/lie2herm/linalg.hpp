#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lie2herm/errors.hpp"
#include "lie2herm/tolerance.hpp"

namespace lie2herm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// <x,y> with respect to a (symmetric positive definite) metric G.
inline double inner(const Vec& x, const Vec& y, const Mat& G) {
  return x.dot(G * y);
}

// Dense rank-3 array, sized n^3. Indexing is (i,j,k) row-major.
struct Tensor3 {
  int n = 0;
  std::vector<double> v;

  Tensor3() = default;
  explicit Tensor3(int dim) : n(dim), v(static_cast<size_t>(dim) * dim * dim, 0.0) {}

  double& operator()(int i, int j, int k) {
    return v[(static_cast<size_t>(i) * n + j) * n + k];
  }
  double operator()(int i, int j, int k) const {
    return v[(static_cast<size_t>(i) * n + j) * n + k];
  }
  double max_abs() const;
};

// Dense rank-4 array, sized n^4.
struct Tensor4 {
  int n = 0;
  std::vector<double> v;

  Tensor4() = default;
  explicit Tensor4(int dim)
      : n(dim), v(static_cast<size_t>(dim) * dim * dim * dim, 0.0) {}

  double& operator()(int i, int j, int k, int l) {
    return v[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
  double max_abs() const;
};

// Classical Gram-Schmidt against the metric G. Throws DependentInputError if
// any input vector falls inside the span of the previous ones (residual norm
// below kRankTol), DimensionMismatchError on size disagreements.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vecs, const Mat& G);

// Gram-Schmidt that *drops* dependent vectors instead of throwing: returns an
// orthonormal basis of span(vecs). Residuals with norm <= drop_tol count as
// zero. Used for derived-algebra and complement construction.
std::vector<Vec> orthonormal_span(const std::vector<Vec>& vecs, const Mat& G,
                                  double drop_tol);

} // namespace lie2herm
