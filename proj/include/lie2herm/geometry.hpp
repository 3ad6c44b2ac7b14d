#pragma once

#include "lie2herm/algebra.hpp"
#include "lie2herm/decomposition.hpp"
#include "lie2herm/kform.hpp"

namespace lie2herm {

class AlmostComplexStructure;

// Left-invariant affine connection: coeff(i,j,k) is the b_k-component of
// nabla_{b_i} b_j in the ambient basis.
struct Connection {
  Tensor3 coeff;

  int dim() const { return coeff.n; }
  // nabla_x y for constant (left-invariant) vector fields.
  Vec apply(const Vec& x, const Vec& y) const;
  Vec apply_basis(int i, int j) const;
};

// Torsion T(x,y) = nabla_x y - nabla_y x - [x,y], same layout as Connection.
struct TorsionTensor {
  Tensor3 coeff;

  int dim() const { return coeff.n; }
  Vec apply(const Vec& x, const Vec& y) const;
  double max_abs() const { return coeff.max_abs(); }
};

// Levi-Civita connection from the Koszul formula
//   2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>
// (valid for any metric Lie algebra, any SPD metric).
Connection levi_civita_koszul(const MetricLieAlgebra& L);

// Levi-Civita connection assembled from the closed-form expressions in the
// split frame (e1, e2, Gamma) of a Lie2Decomposition. Independent of the
// Koszul route; the two must agree on valid input.
Connection levi_civita_closed_form(const Lie2Decomposition& dec);

// Curvature R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z;
// R(i,j,k,l) is the b_l-component of R(b_i,b_j) b_k.
Tensor4 curvature(const Connection& nabla, const MetricLieAlgebra& L);

// Sectional curvature K(x,y) = <R(x,y)y, x> / (|x|^2 |y|^2 - <x,y>^2) for the
// Levi-Civita connection. Throws DegeneratePlaneError when the denominator
// is below kRankTol.
double sectional_curvature(const MetricLieAlgebra& L, const Vec& x, const Vec& y);

enum class PlaneKind { E1E2, E1U, E2U, UV };

// Closed-form sectional curvatures of the split frame planes. u (and v for
// UV) must be unit vectors in Gamma, orthonormal when both are present
// (NotOrthonormalError otherwise); E1E2 ignores them.
double sectional_curvature_closed_form(const Lie2Decomposition& dec,
                                       PlaneKind kind, const Vec& u = Vec(),
                                       const Vec& v = Vec());

// Bismut connection <nabla^B_x y, z> = <nabla_x y, z> + (1/2) c(x,y,z) for a
// Hermitian pair (J integrable and compatible; NotHermitianError otherwise).
// The torsion form c is passed in so callers control how it was produced.
Connection bismut_connection(const MetricLieAlgebra& L,
                             const AlmostComplexStructure& J, const KForm& c);

TorsionTensor torsion(const Connection& nabla, const MetricLieAlgebra& L);

} // namespace lie2herm
