#include "lie2herm/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace lie2herm {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// Shared Gram-Schmidt loop; dependent vectors either throw or are skipped.
std::vector<Vec> gs_impl(const std::vector<Vec>& vecs, const Mat& G,
                         double zero_tol, bool throw_on_dependent) {
  const auto n = G.rows();
  if (G.cols() != n) throw DimensionMismatchError("inner-product matrix must be square");
  std::vector<Vec> out;
  out.reserve(vecs.size());
  for (const Vec& x : vecs) {
    if (x.size() != n)
      throw DimensionMismatchError("vector length does not match the inner product");
    Vec r = x;
    for (const Vec& u : out) r -= inner(u, r, G) * u;
    // One re-orthogonalization pass keeps the basis orthonormal even when the
    // input is badly conditioned (classical GS alone loses digits).
    for (const Vec& u : out) r -= inner(u, r, G) * u;
    const double nrm = std::sqrt(std::max(0.0, inner(r, r, G)));
    if (nrm <= zero_tol) {
      if (throw_on_dependent)
        throw DependentInputError("vector lies in the span of its predecessors");
      continue;
    }
    out.push_back(r / nrm);
  }
  return out;
}

} // namespace

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vecs, const Mat& G) {
  return gs_impl(vecs, G, kRankTol, /*throw_on_dependent=*/true);
}

std::vector<Vec> orthonormal_span(const std::vector<Vec>& vecs, const Mat& G,
                                  double drop_tol) {
  return gs_impl(vecs, G, drop_tol, /*throw_on_dependent=*/false);
}

} // namespace lie2herm
