#include "lie2herm/algebra.hpp"

#include <cmath>

#include "lie2herm/errors.hpp"
#include "lie2herm/tolerance.hpp"

#include <Eigen/Cholesky>

namespace lie2herm {

namespace {

void check_metric(const Mat& G) {
  if (G.rows() != G.cols()) throw Error("metric must be square");
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > tolerance())
    throw Error("metric must be symmetric");
  Eigen::LLT<Mat> llt(G);
  if (llt.info() != Eigen::Success)
    throw Error("metric must be positive definite");
}

} // namespace

MetricLieAlgebra::MetricLieAlgebra(int n)
    : n_(n), C_(n), G_(Mat::Identity(n, n)) {
  if (n < 1) throw DimensionMismatchError("algebra dimension must be positive");
}

MetricLieAlgebra::MetricLieAlgebra(Tensor3 C, Mat G) : n_(C.n), C_(std::move(C)), G_(std::move(G)) {
  if (n_ < 1) throw DimensionMismatchError("algebra dimension must be positive");
  if (G_.rows() != n_ || G_.cols() != n_)
    throw DimensionMismatchError("metric size does not match structure constants");
  check_metric(G_);
}

void MetricLieAlgebra::set_bracket(int i, int j, const Vec& coeffs) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw DimensionMismatchError("basis index out of range");
  if (coeffs.size() != n_)
    throw DimensionMismatchError("bracket coefficient vector has wrong length");
  if (i == j) throw Error("bracket of a basis vector with itself is zero and cannot be set");
  for (int k = 0; k < n_; ++k) {
    C_(i, j, k) = coeffs[k];
    C_(j, i, k) = -coeffs[k];
  }
}

Vec MetricLieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw DimensionMismatchError("basis index out of range");
  Vec out(n_);
  for (int k = 0; k < n_; ++k) out[k] = C_(i, j, k);
  return out;
}

Vec MetricLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw DimensionMismatchError("vector length does not match the algebra");
  Vec out = Vec::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n_; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < n_; ++k) out[k] += w * C_(i, j, k);
    }
  }
  return out;
}

double MetricLieAlgebra::norm(const Vec& x) const {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

ValidationReport validate(const MetricLieAlgebra& L) {
  const int n = L.dim();
  const Tensor3& C = L.structure_constants();

  ValidationReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rep.antisymmetry_residual =
            std::max(rep.antisymmetry_residual, std::abs(C(i, j, k) + C(j, i, k)));

  // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec sum = Vec::Zero(n);
        sum += L.bracket(L.bracket_basis(i, j), Vec::Unit(n, k));
        sum += L.bracket(L.bracket_basis(j, k), Vec::Unit(n, i));
        sum += L.bracket(L.bracket_basis(k, i), Vec::Unit(n, j));
        rep.jacobi_residual = std::max(rep.jacobi_residual, sum.cwiseAbs().maxCoeff());
      }

  rep.ok = rep.antisymmetry_residual <= tolerance() && rep.jacobi_residual <= tolerance();
  return rep;
}

std::vector<Vec> derived_algebra(const MetricLieAlgebra& L) {
  const int n = L.dim();
  std::vector<Vec> images;
  images.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) images.push_back(L.bracket_basis(i, j));
  return orthonormal_span(images, L.metric(), tolerance());
}

} // namespace lie2herm
