#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lie2herm/algebra.hpp"

namespace lie2herm {

// Structural data of an algebra whose derived algebra g' = span{e1,e2} is
// 2-dimensional and abelian, split against the orthogonal complement Gamma:
//   [u, e1] = <a1,u> e1 + <a2,u> e2        u, v in Gamma
//   [u, e2] = <b1,u> e1 + <b2,u> e2
//   [u, v]  = <f1 u, v> e1 + <f2 u, v> e2  (f1, f2 skew on Gamma)
// e1, e2 and the Gamma basis are orthonormal for G; a*, b* live in Gamma and
// are stored as ambient vectors; f1, f2 are matrices in Gamma coordinates.
struct Lie2Decomposition {
  Vec e1, e2;
  std::vector<Vec> gamma;
  Vec a1, a2, b1, b2;
  Mat f1, f2;
  Mat G; // ambient metric, carried so assemble() can reproduce the inner products

  int dim() const { return static_cast<int>(gamma.size()) + 2; }
  // n x (n-2) matrix with the Gamma basis as columns.
  Mat gamma_matrix() const;
  // Gamma-coordinates of an ambient vector (orthogonal projection).
  Vec gamma_coords(const Vec& x) const;
};

// Splits L along its derived algebra. The optional hint supplies (e1, e2);
// hints must be G-orthonormal and span g' (BadHintError otherwise). Without
// hints the Gram-Schmidt basis of g' is used. Throws NotLie2Error when
// dim g' != 2 or g' is not abelian.
Lie2Decomposition decompose(
    const MetricLieAlgebra& L,
    std::optional<std::pair<Vec, Vec>> hint = std::nullopt);

// Like decompose, but also accepts dim g' = 1 by padding: e2 is the first
// ambient basis direction orthogonal to g' for which the reconstructed
// algebra matches L (PaddingImpossibleError when none works or g' = 0).
Lie2Decomposition decompose_extended(
    const MetricLieAlgebra& L,
    std::optional<std::pair<Vec, Vec>> hint = std::nullopt);

// Rebuilds the MetricLieAlgebra the decomposition data describes (inverse of
// decompose up to the choice of frame). dim is a consistency check against
// dec.dim() (DimensionMismatchError). Does not require the data to satisfy
// Jacobi; run validate() on the result to check.
MetricLieAlgebra assemble(const Lie2Decomposition& dec, int dim);
MetricLieAlgebra assemble(const Lie2Decomposition& dec);

// The bracket the decomposition data defines, evaluated on ambient vectors.
Vec decomposition_bracket(const Lie2Decomposition& dec, const Vec& x, const Vec& y);

enum class Family {
  ParallelData,  // a2, b1, b2 all parallel to a1; f1 = f2 = 0
  SkewPair,      // a* = b* = 0; f1, f2 commuting block rotations
  Rejection,     // free draws filtered through validate()
};

// Deterministic pseudo-random algebra with dim g' <= 2 that passes
// validate(). n must be even and >= 4 (DimensionMismatchError); throws
// GenerationFailedError if 1000 draws never satisfy the constraints.
MetricLieAlgebra random_valid(std::uint64_t seed, int n, Family family);

} // namespace lie2herm
