#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lie2herm/decomposition.hpp"
#include "lie2herm/geometry.hpp"
#include "lie2herm/kform.hpp"

namespace lie2herm {

// Almost complex structure: a matrix J with J^2 = -I (checked at
// construction against the global tolerance).
class AlmostComplexStructure {
public:
  explicit AlmostComplexStructure(Mat J);

  int dim() const { return static_cast<int>(J_.rows()); }
  const Mat& matrix() const { return J_; }
  Vec apply(const Vec& x) const { return J_ * x; }

private:
  Mat J_;
};

// Nijenhuis tensor N(x,y) = [x,y] + J([Jx,y] + [x,Jy]) - [Jx,Jy];
// N(i,j,k) is the b_k-component of N(b_i,b_j).
Tensor3 nijenhuis(const MetricLieAlgebra& L, const Mat& J);

// g(Jx,Jy) = g(x,y); residual is max |J^T G J - G|.
bool is_compatible(const MetricLieAlgebra& L, const Mat& J,
                   double* residual = nullptr);

// [Jx,Jy] = [x,y] for all x,y. Implies N = 0.
bool is_abelian(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
                double* residual = nullptr);

// Fundamental 2-form omega(x,y) = g(Jx,y). NotCompatibleError if J is not a
// g-isometry.
KForm kahler_form(const MetricLieAlgebra& L, const AlmostComplexStructure& J);

// Torsion 3-form c(x,y,z) = d omega(Jx,Jy,Jz). Requires a Hermitian pair
// (compatible and Nijenhuis residual within tolerance): NotHermitianError.
KForm c_form(const MetricLieAlgebra& L, const AlmostComplexStructure& J);

enum class Verdict { NonCompatible, NonIntegrable, Kahler, SKT, WeakKT };

std::string to_string(Verdict v);

struct ClassificationReport {
  bool compatible = false;
  double compatibility_residual = 0.0;
  double nijenhuis_residual = 0.0;
  bool integrable = false;
  bool abelian = false;
  double abelian_residual = 0.0;
  // Norms are max-abs over canonical components; NaN when J is not
  // compatible (the forms are not defined then).
  double domega_norm = 0.0;
  double c_norm = 0.0;
  double dc_norm = 0.0;
  Verdict verdict = Verdict::NonCompatible;
};

// Verdict ladder: NonCompatible, else NonIntegrable, else Kahler when
// |d omega| <= tol, else SKT when |dc| <= tol, else WeakKT.
ClassificationReport classify(const MetricLieAlgebra& L,
                              const AlmostComplexStructure& J);

enum class JType { TypeI, TypeII, Mixed };

std::string to_string(JType t);

// Position of J e1 against the splitting: lambda = |Gamma-component of J e1|,
// mu = <J e1, e2>. TypeI when lambda ~ 0, TypeII when mu ~ 0 (then
// u01 = J e1, u02 = J e2 span the image of g' inside Gamma), Mixed otherwise.
struct JTypeReport {
  double lambda = 0.0;
  double mu = 0.0;
  JType type = JType::Mixed;
  std::optional<Vec> u01, u02;
};

JTypeReport classify_J_type(const MetricLieAlgebra& L,
                            const AlmostComplexStructure& J,
                            const Lie2Decomposition& dec);

// Type I structure: J e1 = e2 and J|Gamma = JGamma (given in Gamma
// coordinates; must be orthogonal with square -I: BadGammaStructureError,
// OddGammaError when dim Gamma is odd).
AlmostComplexStructure type1_construct(const Lie2Decomposition& dec,
                                       const Mat& JGamma);

// Type II structure: J e1 = u01, J e2 = u02 (orthonormal vectors in Gamma;
// BadFrameError) and J = JPerp on the orthogonal complement of the frame
// inside Gamma (OddComplementError when that complement has odd dimension,
// BadFrameError when JPerp is not an orthogonal complex structure).
AlmostComplexStructure type2_construct(const Lie2Decomposition& dec,
                                       const Vec& u01, const Vec& u02,
                                       const Mat& JPerp);

// Integrability of a Type I structure: N = 0 iff
//   b2 - a1 = J(a2 + b1)   and   (J f1 - f1 J) = (J f2 J + f2) on Gamma.
// Throws NotTypeIError unless J e1 = +e2 and J preserves Gamma.
struct Theorem1Report {
  bool ok = false;
  double vector_residual = 0.0;
  double map_residual = 0.0;
};

Theorem1Report theorem1_check(const Lie2Decomposition& dec,
                              const AlmostComplexStructure& J);

// Scalar necessary condition for Type I integrability:
//   <a1,a2> - <b1,b2> = <a2,b2> - <a1,b1>.
bool remark2_criterion(const Lie2Decomposition& dec, double* residual = nullptr);

// Abelian Type I criterion: J a1 = b1, J a2 = b2, and J commutes with f1, f2
// on Gamma. Same Type I gate as theorem1_check.
struct AbelianConditionsReport {
  bool ok = false;
  double residual = 0.0;
};

AbelianConditionsReport abelian_type1_conditions(const Lie2Decomposition& dec,
                                                 const AlmostComplexStructure& J);

// Integrability of a Type II structure as ten residuals (indices match the
// order the conditions are stated in; see the implementation):
//   0: <f1 u01, u02>          1: <f2 u01, u02>
//   2: f1(u01) + J a1 ⟂ complement     3: f2(u01) + J a2 ⟂ complement
//   4: f1(u02) + J b1 ⟂ complement     5: f2(u02) + J b2 ⟂ complement
//   6: <b1,u01> - <a1,u02>    7: <b2,u01> - <a2,u02>
//   8: [J, f1] = 0 on the complement   9: [J, f2] = 0 on the complement
// statement_residual re-derives the same conditions in the "data determined
// by f" form (a~ = J f1(u01), ...); both routes must agree on the verdict.
struct Theorem4Report {
  bool ok = false;
  std::array<double, 10> residuals{};
  double statement_residual = 0.0;
};

Theorem4Report theorem4_check(const Lie2Decomposition& dec,
                              const AlmostComplexStructure& J);

// Kahler criterion for Type I Hermitian structures: f1 = f2 = 0 and
// b2 = -a1; alpha, beta are the proportionality coefficients a2 = alpha a1,
// b1 = beta a2 when those are defined (0 otherwise).
struct Theorem5Report {
  bool ok = false;
  double f_residual = 0.0;
  double vector_residual = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

Theorem5Report theorem5_kahler_check(const Lie2Decomposition& dec);

// Kahler criterion for Type II Hermitian structures: f1 = f2 = 0 and b1 = a2.
struct Theorem7Report {
  bool ok = false;
  double f_residual = 0.0;
  double vector_residual = 0.0;
};

Theorem7Report theorem7_kahler_check(const Lie2Decomposition& dec);

// One Type II Hermitian frame found by the grid search.
struct Type2SearchHit {
  int i = 0, j = 0;       // grid indices
  double theta = 0.0, phi = 0.0;
  Vec u01, u02;
  Mat J;
};

// Grid search over frames u01 = cos(theta) g1 + sin(theta) g2,
// u02 = cos(phi) g1 + sin(phi) g2 (theta = 2*pi*i/N, phi = 2*pi*j/N) for a
// 4-dimensional algebra, keeping the frames that give an integrable Type II
// structure. Deterministic order: i ascending, then j.
std::vector<Type2SearchHit> search_type2_hermitian(const MetricLieAlgebra& L,
                                                   int grid_steps);

// Haar-ish random orthogonal complex structure on R^m (m even): polar factor
// of a random skew matrix. Deterministic in the generator state.
Mat random_orthogonal_complex_structure(int m, std::mt19937_64& rng);

// dc evaluated on the J-adapted 4-frame of a 4-dimensional algebra:
// (e1, e2, u01, u02) for Type II, (e1, e2, gamma_1, gamma_2) otherwise.
// Requires a compatible J (NotCompatibleError), dim 4 (DimensionMismatchError).
double dc_top(const MetricLieAlgebra& L, const AlmostComplexStructure& J,
              const Lie2Decomposition& dec);

} // namespace lie2herm
