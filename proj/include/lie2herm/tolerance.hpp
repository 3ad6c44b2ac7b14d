#pragma once

namespace lie2herm {

// Global comparison tolerance for "is this residual zero" decisions.
// Default 1e-9; the CLI maps --tol / LIE2_TOL onto set_tolerance().
double tolerance();
void set_tolerance(double tol);

// Rank decisions (dependence in Gram-Schmidt, degenerate 2-planes) use a
// tighter fixed cutoff than the user-facing tolerance.
inline constexpr double kRankTol = 1e-12;

// Quantities built from two derivative-like passes (curvature cross-checks,
// d∘d) accumulate more roundoff and are compared at this looser cutoff.
inline constexpr double kDerivedTol = 1e-8;

} // namespace lie2herm
