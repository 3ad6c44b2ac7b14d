#include "lie2herm/hermitian.hpp"

#include <cmath>
#include <limits>

#include "lie2herm/errors.hpp"
#include "lie2herm/tolerance.hpp"

namespace lie2herm {

AlmostComplexStructure::AlmostComplexStructure(Mat J) : J_(std::move(J)) {
  if (J_.rows() != J_.cols()) throw DimensionMismatchError("J must be square");
  const Mat sq = J_ * J_ + Mat::Identity(J_.rows(), J_.cols());
  if (sq.cwiseAbs().maxCoeff() > tolerance())
    throw Error("J^2 = -I fails beyond tolerance");
}

Tensor3 nijenhuis(const MetricLieAlgebra& L, const Mat& J) {
  const int n = L.dim();
  if (J.rows() != n || J.cols() != n)
    throw DimensionMismatchError("J dimension does not match the algebra");
  Tensor3 N(n);
  for (int i = 0; i < n; ++i) {
    const Vec bi = Vec::Unit(n, i);
    const Vec Ji = J.col(i);
    for (int j = 0; j < n; ++j) {
      const Vec bj = Vec::Unit(n, j);
      const Vec Jj = J.col(j);
      const Vec val = L.bracket_basis(i, j) +
                      J * (L.bracket(Ji, bj) + L.bracket(bi, Jj)) - L.bracket(Ji, Jj);
      for (int k = 0; k < n; ++k) N(i, j, k) = val[k];
    }
  }
  return N;
}

bool is_compatible(const MetricLieAlgebra& L, const Mat& J, double* residual) {
  const int n = L.dim();
  if (J.rows() != n || J.cols() != n)
    throw DimensionMismatchError("J dimension does not match the algebra");
  const double r = (J.transpose() * L.metric() * J - L.metric()).cwiseAbs().maxCoeff();
  if (residual) *residual = r;
  return r <= tolerance();
}

bool is_abelian(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
                double* residual) {
  const int n = L.dim();
  if (J.dim() != n) throw DimensionMismatchError("J dimension does not match the algebra");
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec diff =
          L.bracket(J.matrix().col(i), J.matrix().col(j)) - L.bracket_basis(i, j);
      r = std::max(r, diff.cwiseAbs().maxCoeff());
    }
  if (residual) *residual = r;
  return r <= tolerance();
}

KForm kahler_form(const MetricLieAlgebra& L, const AlmostComplexStructure& J) {
  double r = 0.0;
  if (!is_compatible(L, J.matrix(), &r))
    throw NotCompatibleError("J is not a metric isometry (residual " + std::to_string(r) + ")");
  const int n = L.dim();
  const Mat M = J.matrix().transpose() * L.metric(); // M(i,j) = <J b_i, b_j>
  if ((M + M.transpose()).cwiseAbs().maxCoeff() > tolerance())
    throw Error("Kahler form failed its antisymmetry assertion");
  KForm omega(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) omega.set({i, j}, M(i, j));
  return omega;
}

namespace {

// c(x,y,z) = domega(Jx,Jy,Jz), assembled on canonical triples. Shared by the
// gated c_form and by classify (which must inspect c even when J fails the
// Hermitian gate).
KForm c_from_domega(const KForm& domega, const Mat& J) {
  const int n = domega.dim();
  KForm c(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        c.set({i, j, k}, domega.evaluate({J.col(i), J.col(j), J.col(k)}));
  return c;
}

} // namespace

KForm c_form(const MetricLieAlgebra& L, const AlmostComplexStructure& J) {
  double r = 0.0;
  if (!is_compatible(L, J.matrix(), &r))
    throw NotHermitianError("J is not compatible with the metric");
  if (nijenhuis(L, J.matrix()).max_abs() > tolerance())
    throw NotHermitianError("J is not integrable");
  return c_from_domega(exterior_derivative(kahler_form(L, J), L), J.matrix());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonCompatible: return "non-compatible";
    case Verdict::NonIntegrable: return "non-integrable";
    case Verdict::Kahler: return "Kahler";
    case Verdict::SKT: return "SKT";
    case Verdict::WeakKT: return "weak-KT";
  }
  return "?";
}

std::string to_string(JType t) {
  switch (t) {
    case JType::TypeI: return "Type I";
    case JType::TypeII: return "Type II";
    case JType::Mixed: return "Mixed";
  }
  return "?";
}

ClassificationReport classify(const MetricLieAlgebra& L, const AlmostComplexStructure& J) {
  ClassificationReport rep;
  rep.compatible = is_compatible(L, J.matrix(), &rep.compatibility_residual);
  rep.nijenhuis_residual = nijenhuis(L, J.matrix()).max_abs();
  rep.integrable = rep.nijenhuis_residual <= tolerance();
  rep.abelian = is_abelian(L, J, &rep.abelian_residual);

  if (!rep.compatible) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.domega_norm = rep.c_norm = rep.dc_norm = nan;
    rep.verdict = Verdict::NonCompatible;
    return rep;
  }

  const KForm omega = kahler_form(L, J);
  const KForm domega = exterior_derivative(omega, L);
  const KForm c = c_from_domega(domega, J.matrix());
  const KForm dc = exterior_derivative(c, L);
  rep.domega_norm = domega.max_abs();
  rep.c_norm = c.max_abs();
  rep.dc_norm = dc.max_abs();

  if (!rep.integrable)
    rep.verdict = Verdict::NonIntegrable;
  else if (rep.domega_norm <= tolerance())
    rep.verdict = Verdict::Kahler;
  else if (rep.dc_norm <= tolerance())
    rep.verdict = Verdict::SKT;
  else
    rep.verdict = Verdict::WeakKT;
  return rep;
}

JTypeReport classify_J_type(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
                            const Lie2Decomposition& dec) {
  if (J.dim() != L.dim() || dec.dim() != L.dim())
    throw DimensionMismatchError("J/decomposition dimensions do not match the algebra");
  JTypeReport rep;
  const Vec Je1 = J.apply(dec.e1);
  rep.mu = L.inner(Je1, dec.e2);
  const Vec gpart = Je1 - L.inner(Je1, dec.e1) * dec.e1 - rep.mu * dec.e2;
  rep.lambda = L.norm(gpart);
  if (rep.lambda <= tolerance()) {
    rep.type = JType::TypeI;
  } else if (std::abs(rep.mu) <= tolerance()) {
    rep.type = JType::TypeII;
    rep.u01 = Je1;
    rep.u02 = J.apply(dec.e2);
  } else {
    rep.type = JType::Mixed;
  }
  return rep;
}

AlmostComplexStructure type1_construct(const Lie2Decomposition& dec, const Mat& JGamma) {
  const int m = static_cast<int>(dec.gamma.size());
  if (m % 2 != 0) throw OddGammaError("complement dimension must be even");
  if (JGamma.rows() != m || JGamma.cols() != m)
    throw DimensionMismatchError("JGamma size does not match dim Gamma");
  if (m > 0) {
    const Mat I = Mat::Identity(m, m);
    if ((JGamma.transpose() * JGamma - I).cwiseAbs().maxCoeff() > tolerance() ||
        (JGamma * JGamma + I).cwiseAbs().maxCoeff() > tolerance())
      throw BadGammaStructureError("JGamma must be orthogonal with square -I");
  }
  const Mat& G = dec.G;
  const Mat P = dec.gamma_matrix();
  Mat J = dec.e2 * (G * dec.e1).transpose() - dec.e1 * (G * dec.e2).transpose() +
          P * JGamma * P.transpose() * G;
  return AlmostComplexStructure(std::move(J));
}

AlmostComplexStructure type2_construct(const Lie2Decomposition& dec, const Vec& u01,
                                       const Vec& u02, const Mat& JPerp) {
  const Mat& G = dec.G;
  const auto n = dec.e1.size();
  if (u01.size() != n || u02.size() != n)
    throw DimensionMismatchError("frame vector length mismatch");

  auto in_gamma = [&](const Vec& u) {
    return std::abs(inner(u, dec.e1, G)) <= tolerance() &&
           std::abs(inner(u, dec.e2, G)) <= tolerance();
  };
  if (!in_gamma(u01) || !in_gamma(u02))
    throw BadFrameError("frame vectors must lie in the complement of the derived algebra");
  if (std::abs(inner(u01, u01, G) - 1.0) > tolerance() ||
      std::abs(inner(u02, u02, G) - 1.0) > tolerance() ||
      std::abs(inner(u01, u02, G)) > tolerance())
    throw BadFrameError("frame vectors must be orthonormal");

  const int m = static_cast<int>(dec.gamma.size());
  const int mc = m - 2;
  if (mc < 0) throw DimensionMismatchError("complement too small for a Type II frame");
  if (mc % 2 != 0) throw OddComplementError("residual complement dimension must be even");
  if (JPerp.rows() != mc || JPerp.cols() != mc)
    throw DimensionMismatchError("JPerp size does not match the residual complement");
  if (mc > 0) {
    const Mat I = Mat::Identity(mc, mc);
    if ((JPerp.transpose() * JPerp - I).cwiseAbs().maxCoeff() > tolerance() ||
        (JPerp * JPerp + I).cwiseAbs().maxCoeff() > tolerance())
      throw BadFrameError("JPerp must be orthogonal with square -I");
  }

  // Orthonormal basis of Gamma ∩ span{u01,u02}^perp.
  std::vector<Vec> proj;
  proj.reserve(dec.gamma.size());
  for (const Vec& g : dec.gamma) {
    Vec v = g - inner(u01, g, G) * u01 - inner(u02, g, G) * u02;
    proj.push_back(std::move(v));
  }
  const auto comp = orthonormal_span(proj, G, tolerance());
  if (static_cast<int>(comp.size()) != mc)
    throw BadFrameError("frame does not leave an orthogonal complement of the right size");
  Mat Q(n, mc);
  for (int t = 0; t < mc; ++t) Q.col(t) = comp[static_cast<size_t>(t)];

  Mat J = u01 * (G * dec.e1).transpose() - dec.e1 * (G * u01).transpose() +
          u02 * (G * dec.e2).transpose() - dec.e2 * (G * u02).transpose();
  if (mc > 0) J += Q * JPerp * Q.transpose() * G;
  return AlmostComplexStructure(std::move(J));
}

namespace {

// Gamma-restriction of J in gamma_basis coordinates.
Mat gamma_restriction(const Lie2Decomposition& dec, const Mat& J) {
  const Mat P = dec.gamma_matrix();
  return P.transpose() * dec.G * J * P;
}

void require_type1(const Lie2Decomposition& dec, const AlmostComplexStructure& J) {
  const Vec Je1 = J.apply(dec.e1);
  const double mu = inner(Je1, dec.e2, dec.G);
  const Vec gpart = Je1 - inner(Je1, dec.e1, dec.G) * dec.e1 - mu * dec.e2;
  if (std::sqrt(std::max(0.0, inner(gpart, gpart, dec.G))) > tolerance() ||
      std::abs(mu - 1.0) > tolerance())
    throw NotTypeIError("structure does not satisfy J e1 = e2");
}

} // namespace

Theorem1Report theorem1_check(const Lie2Decomposition& dec, const AlmostComplexStructure& J) {
  require_type1(dec, J);
  const Mat& G = dec.G;
  Theorem1Report rep;

  const Vec lhs = (dec.b2 - dec.a1) - J.apply(dec.a2 + dec.b1);
  rep.vector_residual = std::sqrt(std::max(0.0, inner(lhs, lhs, G)));

  const Mat Jg = gamma_restriction(dec, J.matrix());
  const Mat map = (Jg * dec.f1 - dec.f1 * Jg) - (Jg * dec.f2 * Jg + dec.f2);
  rep.map_residual = dec.gamma.empty() ? 0.0 : map.cwiseAbs().maxCoeff();

  rep.ok = rep.vector_residual <= tolerance() && rep.map_residual <= tolerance();
  return rep;
}

bool remark2_criterion(const Lie2Decomposition& dec, double* residual) {
  const Mat& G = dec.G;
  const double lhs = inner(dec.a1, dec.a2, G) - inner(dec.b1, dec.b2, G);
  const double rhs = inner(dec.a2, dec.b2, G) - inner(dec.a1, dec.b1, G);
  const double r = std::abs(lhs - rhs);
  if (residual) *residual = r;
  return r <= tolerance();
}

AbelianConditionsReport abelian_type1_conditions(const Lie2Decomposition& dec,
                                                 const AlmostComplexStructure& J) {
  require_type1(dec, J);
  const Mat& G = dec.G;
  AbelianConditionsReport rep;
  auto vec_norm = [&](const Vec& v) { return std::sqrt(std::max(0.0, inner(v, v, G))); };
  double r = std::max(vec_norm(J.apply(dec.a1) - dec.b1), vec_norm(J.apply(dec.a2) - dec.b2));
  if (!dec.gamma.empty()) {
    const Mat Jg = gamma_restriction(dec, J.matrix());
    r = std::max(r, (Jg * dec.f1 - dec.f1 * Jg).cwiseAbs().maxCoeff());
    r = std::max(r, (Jg * dec.f2 - dec.f2 * Jg).cwiseAbs().maxCoeff());
  }
  rep.residual = r;
  rep.ok = r <= tolerance();
  return rep;
}

Theorem4Report theorem4_check(const Lie2Decomposition& dec, const AlmostComplexStructure& J) {
  const Mat& G = dec.G;
  const Vec u01 = J.apply(dec.e1);
  const Vec u02 = J.apply(dec.e2);
  if (std::abs(inner(u01, dec.e1, G)) > tolerance() ||
      std::abs(inner(u01, dec.e2, G)) > tolerance() ||
      std::abs(inner(u02, dec.e1, G)) > tolerance() ||
      std::abs(inner(u02, dec.e2, G)) > tolerance())
    throw NotTypeIIError("structure does not map the derived algebra into its complement");

  const Mat P = dec.gamma_matrix();
  auto F = [&](const Mat& f, const Vec& x) { return (P * (f * (P.transpose() * G * x))).eval(); };
  const Mat& Jm = J.matrix();

  // Orthonormal basis of Gamma ∩ span{u01,u02}^perp.
  std::vector<Vec> proj;
  for (const Vec& g : dec.gamma)
    proj.push_back(g - inner(u01, g, G) * u01 - inner(u02, g, G) * u02);
  const auto comp = orthonormal_span(proj, G, tolerance());

  Theorem4Report rep;
  auto& r = rep.residuals;
  r[0] = std::abs(inner(F(dec.f1, u01), u02, G));
  r[1] = std::abs(inner(F(dec.f2, u01), u02, G));
  const Vec w2 = F(dec.f1, u01) + Jm * dec.a1;
  const Vec w3 = F(dec.f2, u01) + Jm * dec.a2;
  const Vec w4 = F(dec.f1, u02) + Jm * dec.b1;
  const Vec w5 = F(dec.f2, u02) + Jm * dec.b2;
  for (const Vec& q : comp) {
    r[2] = std::max(r[2], std::abs(inner(w2, q, G)));
    r[3] = std::max(r[3], std::abs(inner(w3, q, G)));
    r[4] = std::max(r[4], std::abs(inner(w4, q, G)));
    r[5] = std::max(r[5], std::abs(inner(w5, q, G)));
  }
  r[6] = std::abs(inner(dec.b1, u01, G) - inner(dec.a1, u02, G));
  r[7] = std::abs(inner(dec.b2, u01, G) - inner(dec.a2, u02, G));
  for (const Vec& q : comp)
    for (const Vec& p : comp) {
      r[8] = std::max(r[8], std::abs(inner(F(dec.f1, Jm * q) - Jm * F(dec.f1, q), p, G)));
      r[9] = std::max(r[9], std::abs(inner(F(dec.f2, Jm * q) - Jm * F(dec.f2, q), p, G)));
    }
  double max_r = 0.0;
  for (double x : r) max_r = std::max(max_r, x);
  rep.ok = max_r <= tolerance();

  // Statement route: the data determined by f via the complement projections.
  auto tilde = [&](const Vec& x) {
    return (x - inner(x, u01, G) * u01 - inner(x, u02, G) * u02).eval();
  };
  auto vec_norm = [&](const Vec& v) { return std::sqrt(std::max(0.0, inner(v, v, G))); };
  double s = std::max({vec_norm(tilde(dec.a1) - Jm * F(dec.f1, u01)),
                       vec_norm(tilde(dec.a2) - Jm * F(dec.f2, u01)),
                       vec_norm(tilde(dec.b1) - Jm * F(dec.f1, u02)),
                       vec_norm(tilde(dec.b2) - Jm * F(dec.f2, u02)), r[6], r[7], r[8], r[9]});
  rep.statement_residual = s;
  const bool ok_statement = s <= tolerance();
  if (rep.ok != ok_statement)
    throw Error("equation-list and statement forms of the Type II criterion disagree");
  return rep;
}

Theorem5Report theorem5_kahler_check(const Lie2Decomposition& dec) {
  const Mat& G = dec.G;
  Theorem5Report rep;
  rep.f_residual =
      dec.gamma.empty() ? 0.0 : std::max(dec.f1.cwiseAbs().maxCoeff(), dec.f2.cwiseAbs().maxCoeff());
  const Vec s = dec.b2 + dec.a1;
  rep.vector_residual = std::sqrt(std::max(0.0, inner(s, s, G)));
  rep.ok = rep.f_residual <= tolerance() && rep.vector_residual <= tolerance();

  const double a1sq = inner(dec.a1, dec.a1, G);
  rep.alpha = a1sq > tolerance() * tolerance() ? inner(dec.a2, dec.a1, G) / a1sq : 0.0;
  const double a2sq = inner(dec.a2, dec.a2, G);
  rep.beta = a2sq > tolerance() * tolerance() ? inner(dec.b1, dec.a2, G) / a2sq : 0.0;
  return rep;
}

Theorem7Report theorem7_kahler_check(const Lie2Decomposition& dec) {
  const Mat& G = dec.G;
  Theorem7Report rep;
  rep.f_residual =
      dec.gamma.empty() ? 0.0 : std::max(dec.f1.cwiseAbs().maxCoeff(), dec.f2.cwiseAbs().maxCoeff());
  const Vec s = dec.b1 - dec.a2;
  rep.vector_residual = std::sqrt(std::max(0.0, inner(s, s, G)));
  rep.ok = rep.f_residual <= tolerance() && rep.vector_residual <= tolerance();
  return rep;
}

std::vector<Type2SearchHit> search_type2_hermitian(const MetricLieAlgebra& L, int grid_steps) {
  if (grid_steps < 1) throw Error("grid must have at least one step");
  const int n = L.dim();
  if (n != 4) throw DimensionMismatchError("the frame search is defined for dimension 4");

  Lie2Decomposition dec;
  const auto derived = derived_algebra(L);
  if (derived.empty()) {
    // Abelian input: no derived algebra to anchor the split, so fix the
    // trivial frame from the ambient basis. All decomposition data is zero.
    const auto frame =
        gram_schmidt({Vec::Unit(n, 0), Vec::Unit(n, 1)}, L.metric());
    dec.e1 = frame[0];
    dec.e2 = frame[1];
    std::vector<Vec> proj;
    for (int p = 0; p < n; ++p) {
      Vec v = Vec::Unit(n, p);
      v -= L.inner(dec.e1, v) * dec.e1;
      v -= L.inner(dec.e2, v) * dec.e2;
      proj.push_back(std::move(v));
    }
    dec.gamma = orthonormal_span(proj, L.metric(), tolerance());
    dec.G = L.metric();
    dec.a1 = dec.a2 = dec.b1 = dec.b2 = Vec::Zero(n);
    dec.f1 = dec.f2 = Mat::Zero(2, 2);
  } else if (derived.size() == 1) {
    dec = decompose_extended(L);
  } else {
    dec = decompose(L);
  }

  const Vec& g1 = dec.gamma[0];
  const Vec& g2 = dec.gamma[1];
  const double step = 2.0 * M_PI / grid_steps;
  const Mat empty(0, 0);

  std::vector<Type2SearchHit> hits;
  for (int i = 0; i < grid_steps; ++i) {
    const double theta = step * i;
    const Vec u01 = std::cos(theta) * g1 + std::sin(theta) * g2;
    for (int j = 0; j < grid_steps; ++j) {
      const double phi = step * j;
      const Vec u02 = std::cos(phi) * g1 + std::sin(phi) * g2;
      if (std::abs(L.inner(u01, u02)) > tolerance()) continue;
      const AlmostComplexStructure J = type2_construct(dec, u01, u02, empty);
      if (!is_compatible(L, J.matrix())) continue;
      if (!theorem4_check(dec, J).ok) continue;
      hits.push_back({i, j, theta, phi, u01, u02, J.matrix()});
    }
  }
  return hits;
}

Mat random_orthogonal_complex_structure(int m, std::mt19937_64& rng) {
  if (m <= 0 || m % 2 != 0)
    throw DimensionMismatchError("complex structures need positive even dimension");
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Mat A(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) A(i, j) = gauss(rng);
    const Mat S = (A - A.transpose()) / 2.0;
    Eigen::JacobiSVD<Mat> svd(S, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() < 1e-6) continue; // near-singular draw
    Mat Q = svd.matrixU() * svd.matrixV().transpose();
    if ((Q * Q + Mat::Identity(m, m)).cwiseAbs().maxCoeff() <= tolerance()) return Q;
  }
}

double dc_top(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
              const Lie2Decomposition& dec) {
  if (L.dim() != 4) throw DimensionMismatchError("dc_top is defined for dimension 4");
  const KForm omega = kahler_form(L, J); // NotCompatible on failure
  const KForm c = c_from_domega(exterior_derivative(omega, L), J.matrix());
  const KForm dc = exterior_derivative(c, L);

  const JTypeReport jt = classify_J_type(L, J, dec);
  std::vector<Vec> frame{dec.e1, dec.e2};
  if (jt.type == JType::TypeII) {
    frame.push_back(*jt.u01);
    frame.push_back(*jt.u02);
  } else {
    frame.push_back(dec.gamma.at(0));
    frame.push_back(dec.gamma.at(1));
  }
  return dc.evaluate(frame);
}

} // namespace lie2herm
