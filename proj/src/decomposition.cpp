#include "lie2herm/decomposition.hpp"

#include <cmath>
#include <random>

#include "lie2herm/errors.hpp"
#include "lie2herm/tolerance.hpp"

namespace lie2herm {

Mat Lie2Decomposition::gamma_matrix() const {
  const int n = static_cast<int>(e1.size());
  Mat P(n, static_cast<int>(gamma.size()));
  for (size_t t = 0; t < gamma.size(); ++t) P.col(static_cast<int>(t)) = gamma[t];
  return P;
}

Vec Lie2Decomposition::gamma_coords(const Vec& x) const {
  return gamma_matrix().transpose() * G * x;
}

namespace {

void check_decomposition_shapes(const Lie2Decomposition& dec) {
  const auto n = dec.e1.size();
  const auto m = static_cast<Eigen::Index>(dec.gamma.size());
  if (n < 2) throw DimensionMismatchError("decomposition needs ambient dimension >= 2");
  auto want = [n](const Vec& v, const char* what) {
    if (v.size() != n) throw DimensionMismatchError(std::string(what) + " has wrong length");
  };
  want(dec.e2, "e2");
  want(dec.a1, "a1");
  want(dec.a2, "a2");
  want(dec.b1, "b1");
  want(dec.b2, "b2");
  for (const Vec& g : dec.gamma) want(g, "gamma vector");
  if (dec.f1.rows() != m || dec.f1.cols() != m || dec.f2.rows() != m || dec.f2.cols() != m)
    throw DimensionMismatchError("f1/f2 must be square of size dim Gamma");
  if (dec.G.rows() != n || dec.G.cols() != n)
    throw DimensionMismatchError("decomposition metric has wrong size");
}

} // namespace

Vec decomposition_bracket(const Lie2Decomposition& dec, const Vec& x, const Vec& y) {
  const Mat& G = dec.G;
  const double xi1 = inner(x, dec.e1, G), xi2 = inner(x, dec.e2, G);
  const double eta1 = inner(y, dec.e1, G), eta2 = inner(y, dec.e2, G);
  const Vec u = x - xi1 * dec.e1 - xi2 * dec.e2;
  const Vec v = y - eta1 * dec.e1 - eta2 * dec.e2;
  const Vec ut = dec.gamma_coords(u), vt = dec.gamma_coords(v);

  const double c1 = (dec.f1 * ut).dot(vt)
      + eta1 * inner(dec.a1, u, G) - xi1 * inner(dec.a1, v, G)
      + eta2 * inner(dec.b1, u, G) - xi2 * inner(dec.b1, v, G);
  const double c2 = (dec.f2 * ut).dot(vt)
      + eta1 * inner(dec.a2, u, G) - xi1 * inner(dec.a2, v, G)
      + eta2 * inner(dec.b2, u, G) - xi2 * inner(dec.b2, v, G);
  return c1 * dec.e1 + c2 * dec.e2;
}

MetricLieAlgebra assemble(const Lie2Decomposition& dec, int dim) {
  check_decomposition_shapes(dec);
  if (dim != dec.dim()) throw DimensionMismatchError("assemble: dimension disagrees with data");
  const int n = dim;
  MetricLieAlgebra L{Tensor3(n), dec.G};
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      L.set_bracket(p, q, decomposition_bracket(dec, Vec::Unit(n, p), Vec::Unit(n, q)));
  return L;
}

MetricLieAlgebra assemble(const Lie2Decomposition& dec) {
  check_decomposition_shapes(dec);
  return assemble(dec, dec.dim());
}

namespace {

// Recovery formulas shared by decompose and decompose_extended: data of the
// split along the given orthonormal (e1, e2, gamma) frame.
Lie2Decomposition recover(const MetricLieAlgebra& L, const Vec& e1, const Vec& e2,
                          std::vector<Vec> gamma) {
  const int m = static_cast<int>(gamma.size());
  Lie2Decomposition dec;
  dec.e1 = e1;
  dec.e2 = e2;
  dec.gamma = std::move(gamma);
  dec.G = L.metric();
  dec.a1 = Vec::Zero(L.dim());
  dec.a2 = Vec::Zero(L.dim());
  dec.b1 = Vec::Zero(L.dim());
  dec.b2 = Vec::Zero(L.dim());
  for (int t = 0; t < m; ++t) {
    const Vec bu1 = L.bracket(dec.gamma[t], e1);
    const Vec bu2 = L.bracket(dec.gamma[t], e2);
    dec.a1 += L.inner(bu1, e1) * dec.gamma[t];
    dec.a2 += L.inner(bu1, e2) * dec.gamma[t];
    dec.b1 += L.inner(bu2, e1) * dec.gamma[t];
    dec.b2 += L.inner(bu2, e2) * dec.gamma[t];
  }
  dec.f1 = Mat::Zero(m, m);
  dec.f2 = Mat::Zero(m, m);
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < m; ++s) {
      const Vec br = L.bracket(dec.gamma[t], dec.gamma[s]);
      dec.f1(s, t) = L.inner(br, e1);
      dec.f2(s, t) = L.inner(br, e2);
    }
  return dec;
}

// Orthonormal basis of the orthogonal complement of span{e1,e2}, from the
// ambient basis vectors projected off that span (dependent ones dropped).
std::vector<Vec> complement_basis(const MetricLieAlgebra& L, const Vec& e1, const Vec& e2) {
  const int n = L.dim();
  std::vector<Vec> proj;
  proj.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    Vec v = Vec::Unit(n, p);
    v -= L.inner(e1, v) * e1;
    v -= L.inner(e2, v) * e2;
    proj.push_back(v);
  }
  auto gamma = orthonormal_span(proj, L.metric(), tolerance());
  if (static_cast<int>(gamma.size()) != n - 2)
    throw Error("complement of the derived algebra has unexpected dimension");
  return gamma;
}

double reconstruction_residual(const MetricLieAlgebra& L, const Lie2Decomposition& dec) {
  const int n = L.dim();
  double r = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const Vec diff = decomposition_bracket(dec, Vec::Unit(n, p), Vec::Unit(n, q)) -
                       L.bracket_basis(p, q);
      r = std::max(r, diff.cwiseAbs().maxCoeff());
    }
  return r;
}

void check_hint_vector(const MetricLieAlgebra& L, const std::vector<Vec>& derived,
                       const Vec& h, const char* name) {
  if (h.size() != L.dim())
    throw DimensionMismatchError(std::string(name) + " hint has wrong length");
  Vec r = h;
  for (const Vec& d : derived) r -= L.inner(d, r) * d;
  if (L.norm(r) > tolerance())
    throw BadHintError(std::string(name) + " hint does not lie in the derived algebra");
  if (std::abs(L.inner(h, h) - 1.0) > tolerance())
    throw BadHintError(std::string(name) + " hint is not a unit vector");
}

} // namespace

Lie2Decomposition decompose(const MetricLieAlgebra& L,
                            std::optional<std::pair<Vec, Vec>> hint) {
  const auto derived = derived_algebra(L);
  if (derived.size() != 2)
    throw NotLie2Error("derived algebra has dimension " + std::to_string(derived.size()) +
                       ", expected 2");
  if (L.norm(L.bracket(derived[0], derived[1])) > tolerance())
    throw NotLie2Error("derived algebra is not abelian");

  Vec e1, e2;
  if (hint) {
    check_hint_vector(L, derived, hint->first, "e1");
    check_hint_vector(L, derived, hint->second, "e2");
    if (std::abs(L.inner(hint->first, hint->second)) > tolerance())
      throw BadHintError("hint vectors are not orthogonal");
    e1 = hint->first;
    e2 = hint->second;
  } else {
    e1 = derived[0];
    e2 = derived[1];
  }

  Lie2Decomposition dec = recover(L, e1, e2, complement_basis(L, e1, e2));
  if (reconstruction_residual(L, dec) > tolerance())
    throw NotLie2Error("brackets do not have the two-dimensional split form");
  return dec;
}

Lie2Decomposition decompose_extended(const MetricLieAlgebra& L,
                                     std::optional<std::pair<Vec, Vec>> hint) {
  const auto derived = derived_algebra(L);
  if (derived.size() == 2) return decompose(L, std::move(hint));
  if (derived.size() > 2)
    throw NotLie2Error("derived algebra has dimension " + std::to_string(derived.size()) +
                       ", expected at most 2");
  if (derived.empty())
    throw PaddingImpossibleError("derived algebra is zero-dimensional; no frame to extend");

  const int n = L.dim();
  if (hint) {
    check_hint_vector(L, derived, hint->first, "e1");
    if (hint->second.size() != n) throw DimensionMismatchError("e2 hint has wrong length");
    if (std::abs(L.inner(hint->second, hint->second) - 1.0) > tolerance() ||
        std::abs(L.inner(hint->first, hint->second)) > tolerance())
      throw BadHintError("e2 hint is not unit and orthogonal to e1");
    Lie2Decomposition dec =
        recover(L, hint->first, hint->second, complement_basis(L, hint->first, hint->second));
    if (reconstruction_residual(L, dec) > tolerance())
      throw BadHintError("e2 hint does not keep the split bracket identities");
    return dec;
  }

  const Vec& e1 = derived[0];
  for (int p = 0; p < n; ++p) {
    const Vec w = Vec::Unit(n, p);
    if (std::abs(L.inner(e1, w)) > tolerance()) continue;
    Vec e2 = w - L.inner(e1, w) * e1;
    e2 /= L.norm(e2);
    Lie2Decomposition dec = recover(L, e1, e2, complement_basis(L, e1, e2));
    if (reconstruction_residual(L, dec) <= tolerance()) return dec;
  }
  throw PaddingImpossibleError(
      "no ambient basis vector extends the derived algebra consistently");
}

namespace {

Mat block_rotations(const std::vector<double>& angles) {
  const int m = static_cast<int>(angles.size()) * 2;
  Mat f = Mat::Zero(m, m);
  for (size_t t = 0; t < angles.size(); ++t) {
    const int o = static_cast<int>(t) * 2;
    f(o, o + 1) = -angles[t];
    f(o + 1, o) = angles[t];
  }
  return f;
}

} // namespace

MetricLieAlgebra random_valid(std::uint64_t seed, int n, Family family) {
  if (n < 4 || n % 2 != 0)
    throw DimensionMismatchError("random_valid needs even dimension >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scal(-1.5, 1.5);
  std::bernoulli_distribution coin(0.5);
  const int m = n - 2;

  Lie2Decomposition dec;
  dec.e1 = Vec::Unit(n, 0);
  dec.e2 = Vec::Unit(n, 1);
  for (int t = 0; t < m; ++t) dec.gamma.push_back(Vec::Unit(n, t + 2));
  dec.G = Mat::Identity(n, n);
  dec.a1 = Vec::Zero(n);
  dec.a2 = Vec::Zero(n);
  dec.b1 = Vec::Zero(n);
  dec.b2 = Vec::Zero(n);
  dec.f1 = Mat::Zero(m, m);
  dec.f2 = Mat::Zero(m, m);

  auto gamma_vec = [&](auto draw) {
    Vec v = Vec::Zero(n);
    for (int t = 0; t < m; ++t) v[t + 2] = draw();
    return v;
  };

  switch (family) {
    case Family::ParallelData: {
      // a2 = alpha a1, b1 = alpha beta a1, b2 = gamma a1: Jacobi holds for any
      // scalars; the derived algebra is 2-dim iff gamma != alpha^2 beta.
      Vec a1;
      do {
        a1 = gamma_vec([&] { return unit(rng); });
      } while (a1.norm() <= 0.3);
      double alpha, beta, gam;
      do {
        alpha = scal(rng);
        beta = scal(rng);
        gam = scal(rng);
      } while (std::abs(gam - alpha * alpha * beta) <= 0.1);
      dec.a1 = a1;
      dec.a2 = alpha * a1;
      dec.b1 = alpha * beta * a1;
      dec.b2 = gam * a1;
      return assemble(dec);
    }
    case Family::SkewPair: {
      // a = b = 0 puts every bracket in the center, so Jacobi is automatic.
      const int blocks = m / 2;
      std::vector<double> th(static_cast<size_t>(blocks)), ph(static_cast<size_t>(blocks));
      if (blocks == 1) {
        do {
          th[0] = scal(rng);
        } while (std::abs(th[0]) <= 0.3);
        ph[0] = 0.0; // a lone block pair can only span one derived direction
      } else {
        do {
          for (auto& x : th) x = scal(rng);
          for (auto& x : ph) x = scal(rng);
        } while (std::abs(th[0] * ph[1] - th[1] * ph[0]) <= 0.05);
      }
      dec.f1 = block_rotations(th);
      dec.f2 = block_rotations(ph);
      return assemble(dec);
    }
    case Family::Rejection: {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        auto maybe_vec = [&] {
          return coin(rng) ? gamma_vec([&] { return unit(rng); }) : Vec::Zero(n);
        };
        dec.a1 = maybe_vec();
        dec.a2 = maybe_vec();
        dec.b1 = maybe_vec();
        dec.b2 = maybe_vec();
        auto maybe_skew = [&] {
          if (!coin(rng)) return Mat::Zero(m, m).eval();
          Mat A(m, m);
          for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) A(r, c) = unit(rng);
          return ((A - A.transpose()) / 2.0).eval();
        };
        dec.f1 = maybe_skew();
        dec.f2 = maybe_skew();
        MetricLieAlgebra L = assemble(dec);
        if (validate(L).ok) return L;
      }
      throw GenerationFailedError("no Jacobi-satisfying draw in 1000 attempts");
    }
  }
  throw Error("unknown generator family");
}

} // namespace lie2herm
