#pragma once

#include <stdexcept>
#include <string>

namespace lie2herm {

// Base class for every error thrown by this library. Catching Error is enough
// to distinguish domain failures from programming bugs (std::logic_error etc.).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LIE2HERM_DEFINE_ERROR(NAME)                                            \
  struct NAME : Error {                                                        \
    using Error::Error;                                                        \
  }

// linear algebra
LIE2HERM_DEFINE_ERROR(DimensionMismatchError); // incompatible sizes anywhere
LIE2HERM_DEFINE_ERROR(DependentInputError);    // Gram-Schmidt hit a dependent vector

// algebra / decomposition
LIE2HERM_DEFINE_ERROR(NotLie2Error);           // derived algebra not 2-dim abelian (or bad shape)
LIE2HERM_DEFINE_ERROR(BadHintError);           // supplied (e1,e2) not an orthonormal basis of g'
LIE2HERM_DEFINE_ERROR(PaddingImpossibleError); // cannot extend g' to a 2-dim frame
LIE2HERM_DEFINE_ERROR(GenerationFailedError);  // random generator exhausted its retry budget

// geometry
LIE2HERM_DEFINE_ERROR(DegeneratePlaneError); // sectional curvature of a degenerate 2-plane
LIE2HERM_DEFINE_ERROR(NotOrthonormalError);  // closed-form curvature needs orthonormal inputs

// hermitian structures
LIE2HERM_DEFINE_ERROR(NotCompatibleError);      // J is not a g-isometry
LIE2HERM_DEFINE_ERROR(NotHermitianError);       // J not compatible or not integrable
LIE2HERM_DEFINE_ERROR(NotTypeIError);           // J does not preserve g' with the fixed orientation
LIE2HERM_DEFINE_ERROR(NotTypeIIError);          // J does not map g' into its complement
LIE2HERM_DEFINE_ERROR(BadGammaStructureError);  // J_Gamma is not an orthogonal complex structure
LIE2HERM_DEFINE_ERROR(OddGammaError);           // complex structure needs even-dim complement of g'
LIE2HERM_DEFINE_ERROR(BadFrameError);           // (u01,u02) not orthonormal in the complement
LIE2HERM_DEFINE_ERROR(OddComplementError);      // J_perp needs an even-dim space

// catalog / io
LIE2HERM_DEFINE_ERROR(UnknownNameError);
LIE2HERM_DEFINE_ERROR(ParseError);
LIE2HERM_DEFINE_ERROR(MissingJError); // operation needs an almost complex structure

#undef LIE2HERM_DEFINE_ERROR

} // namespace lie2herm
