#include "lie2herm/geometry.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "lie2herm/errors.hpp"
#include "lie2herm/hermitian.hpp"
#include "lie2herm/tolerance.hpp"

namespace lie2herm {

Vec Connection::apply_basis(int i, int j) const {
  const int n = coeff.n;
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw DimensionMismatchError("basis index out of range");
  Vec out(n);
  for (int k = 0; k < n; ++k) out[k] = coeff(i, j, k);
  return out;
}

Vec Connection::apply(const Vec& x, const Vec& y) const {
  const int n = coeff.n;
  if (x.size() != n || y.size() != n)
    throw DimensionMismatchError("vector length does not match the connection");
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) out[k] += w * coeff(i, j, k);
    }
  }
  return out;
}

Vec TorsionTensor::apply(const Vec& x, const Vec& y) const {
  const int n = coeff.n;
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) out[k] += w * coeff(i, j, k);
    }
  }
  return out;
}

Connection levi_civita_koszul(const MetricLieAlgebra& L) {
  const int n = L.dim();
  Connection conn{Tensor3(n)};
  Eigen::LLT<Mat> llt(L.metric());
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    const Vec bi = Vec::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Vec bj = Vec::Unit(n, j);
      const Vec bij = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        const Vec bk = Vec::Unit(n, k);
        rhs[k] = 0.5 * (L.inner(bij, bk) - L.inner(L.bracket_basis(j, k), bi) +
                        L.inner(L.bracket_basis(k, i), bj));
      }
      // <nabla_i b_j, b_k> = rhs_k, i.e. G * nabla = rhs.
      const Vec nab = llt.solve(rhs);
      for (int k = 0; k < n; ++k) conn.coeff(i, j, k) = nab[k];
    }
  }
  return conn;
}

namespace {

// The nine split-frame formulas combined into one bilinear expression; x and
// y are ambient vectors, the result is ambient.
Vec closed_form_nabla(const Lie2Decomposition& dec, const Vec& x, const Vec& y) {
  const Mat& G = dec.G;
  const Mat P = dec.gamma_matrix();
  const double xi1 = inner(x, dec.e1, G), xi2 = inner(x, dec.e2, G);
  const double eta1 = inner(y, dec.e1, G), eta2 = inner(y, dec.e2, G);
  const Vec u = x - xi1 * dec.e1 - xi2 * dec.e2;
  const Vec v = y - eta1 * dec.e1 - eta2 * dec.e2;
  const Vec ut = P.transpose() * G * u, vt = P.transpose() * G * v;

  const Vec half_a2b1 = 0.5 * (dec.a2 + dec.b1);
  Vec out = Vec::Zero(x.size());

  // nabla_{e1}e1 = a1, nabla_{e1}e2 = nabla_{e2}e1 = (a2+b1)/2, nabla_{e2}e2 = b2
  out += (xi1 * eta1) * dec.a1;
  out += (xi1 * eta2 + xi2 * eta1) * half_a2b1;
  out += (xi2 * eta2) * dec.b2;

  // nabla_{e1}v = -<a1,v>e1 - (1/2)<a2+b1,v>e2 - (1/2) f1(v)
  out += xi1 * (-inner(dec.a1, v, G) * dec.e1 - inner(half_a2b1, v, G) * dec.e2 -
                0.5 * (P * (dec.f1 * vt)));
  // nabla_{e2}v = -(1/2)<a2+b1,v>e1 - <b2,v>e2 - (1/2) f2(v)
  out += xi2 * (-inner(half_a2b1, v, G) * dec.e1 - inner(dec.b2, v, G) * dec.e2 -
                0.5 * (P * (dec.f2 * vt)));
  // nabla_u e1 = (1/2)<a2-b1,u>e2 - (1/2) f1(u)
  out += eta1 * (0.5 * inner(dec.a2 - dec.b1, u, G) * dec.e2 - 0.5 * (P * (dec.f1 * ut)));
  // nabla_u e2 = (1/2)<b1-a2,u>e1 - (1/2) f2(u)
  out += eta2 * (0.5 * inner(dec.b1 - dec.a2, u, G) * dec.e1 - 0.5 * (P * (dec.f2 * ut)));
  // nabla_u v = (1/2)(<f1(u),v>e1 + <f2(u),v>e2)
  out += 0.5 * ((dec.f1 * ut).dot(vt) * dec.e1 + (dec.f2 * ut).dot(vt) * dec.e2);
  return out;
}

} // namespace

Connection levi_civita_closed_form(const Lie2Decomposition& dec) {
  const int n = dec.dim();
  Connection conn{Tensor3(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec nab = closed_form_nabla(dec, Vec::Unit(n, i), Vec::Unit(n, j));
      for (int k = 0; k < n; ++k) conn.coeff(i, j, k) = nab[k];
    }
  return conn;
}

Tensor4 curvature(const Connection& nabla, const MetricLieAlgebra& L) {
  const int n = L.dim();
  if (nabla.dim() != n)
    throw DimensionMismatchError("connection dimension does not match the algebra");
  Tensor4 R(n);
  for (int i = 0; i < n; ++i) {
    const Vec bi = Vec::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Vec bj = Vec::Unit(n, j);
      const Vec bij = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        const Vec col = nabla.apply(bi, nabla.apply_basis(j, k)) -
                        nabla.apply(bj, nabla.apply_basis(i, k)) -
                        nabla.apply(bij, Vec::Unit(n, k));
        for (int l = 0; l < n; ++l) R(i, j, k, l) = col[l];
      }
    }
  }
  return R;
}

double sectional_curvature(const MetricLieAlgebra& L, const Vec& x, const Vec& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw DimensionMismatchError("vector length does not match the algebra");
  const double den =
      L.inner(x, x) * L.inner(y, y) - L.inner(x, y) * L.inner(x, y);
  if (den <= kRankTol) throw DegeneratePlaneError("plane spanned by x, y is degenerate");

  const Connection nabla = levi_civita_koszul(L);
  const Vec ryy = nabla.apply(x, nabla.apply(y, y)) - nabla.apply(y, nabla.apply(x, y)) -
                  nabla.apply(L.bracket(x, y), y);
  return L.inner(ryy, x) / den;
}

namespace {

void require_unit_gamma(const Lie2Decomposition& dec, const Vec& u, const char* name) {
  if (u.size() != dec.e1.size())
    throw DimensionMismatchError(std::string(name) + " has wrong length");
  const Mat& G = dec.G;
  if (std::abs(inner(u, u, G) - 1.0) > tolerance())
    throw NotOrthonormalError(std::string(name) + " is not a unit vector");
  if (std::abs(inner(u, dec.e1, G)) > tolerance() ||
      std::abs(inner(u, dec.e2, G)) > tolerance())
    throw NotOrthonormalError(std::string(name) + " is not orthogonal to the derived algebra");
}

} // namespace

double sectional_curvature_closed_form(const Lie2Decomposition& dec, PlaneKind kind,
                                       const Vec& u, const Vec& v) {
  const Mat& G = dec.G;
  switch (kind) {
    case PlaneKind::E1E2: {
      const Vec s = dec.a2 + dec.b1;
      return 0.25 * inner(s, s, G) - inner(dec.a1, dec.b2, G);
    }
    case PlaneKind::E1U: {
      require_unit_gamma(dec, u, "u");
      const Vec f1u = dec.gamma_matrix() * (dec.f1 * dec.gamma_coords(u));
      const double b1u = inner(dec.b1, u, G), a2u = inner(dec.a2, u, G);
      const double a1u = inner(dec.a1, u, G);
      return 0.25 * (b1u * b1u - 3.0 * a2u * a2u + inner(f1u, f1u, G)) - a1u * a1u -
             0.5 * a2u * b1u;
    }
    case PlaneKind::E2U: {
      require_unit_gamma(dec, u, "u");
      const Vec f2u = dec.gamma_matrix() * (dec.f2 * dec.gamma_coords(u));
      const double b1u = inner(dec.b1, u, G), a2u = inner(dec.a2, u, G);
      const double b2u = inner(dec.b2, u, G);
      return 0.25 * (a2u * a2u - 3.0 * b1u * b1u + inner(f2u, f2u, G)) - b2u * b2u -
             0.5 * a2u * b1u;
    }
    case PlaneKind::UV: {
      require_unit_gamma(dec, u, "u");
      require_unit_gamma(dec, v, "v");
      if (std::abs(inner(u, v, G)) > tolerance())
        throw NotOrthonormalError("u and v are not orthogonal");
      const Vec f1v = dec.gamma_matrix() * (dec.f1 * dec.gamma_coords(v));
      const Vec f2v = dec.gamma_matrix() * (dec.f2 * dec.gamma_coords(v));
      const double p = inner(u, f1v, G), q = inner(u, f2v, G);
      return -0.75 * (p * p + q * q);
    }
  }
  throw Error("unknown plane kind");
}

Connection bismut_connection(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
                             const KForm& c) {
  const int n = L.dim();
  if (J.dim() != n) throw DimensionMismatchError("J dimension does not match the algebra");
  if (c.dim() != n || c.degree() != 3)
    throw DimensionMismatchError("torsion form must be a 3-form on the algebra");

  double compat_residual = 0.0;
  if (!is_compatible(L, J.matrix(), &compat_residual))
    throw NotHermitianError("J is not compatible with the metric");
  if (nijenhuis(L, J.matrix()).max_abs() > tolerance())
    throw NotHermitianError("J is not integrable");

  const Connection lc = levi_civita_koszul(L);
  Connection bc{Tensor3(n)};
  Eigen::LLT<Mat> llt(L.metric());
  Vec rhs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) rhs[k] = 0.5 * c.get({i, j, k});
      const Vec extra = llt.solve(rhs); // G * extra = c(i,j,.)/2
      for (int k = 0; k < n; ++k) bc.coeff(i, j, k) = lc.coeff(i, j, k) + extra[k];
    }
  return bc;
}

TorsionTensor torsion(const Connection& nabla, const MetricLieAlgebra& L) {
  const int n = L.dim();
  if (nabla.dim() != n)
    throw DimensionMismatchError("connection dimension does not match the algebra");
  TorsionTensor T{Tensor3(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec t = nabla.apply_basis(i, j) - nabla.apply_basis(j, i) - L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) T.coeff(i, j, k) = t[k];
    }
  return T;
}

} // namespace lie2herm
