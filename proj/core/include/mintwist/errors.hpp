#pragma once

#include <stdexcept>

namespace mintwist {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MINTWIST_ERROR(NAME) \
  struct NAME : Error {      \
    using Error::Error;      \
  }

MINTWIST_ERROR(NonSquare);
MINTWIST_ERROR(NotHermitian);
MINTWIST_ERROR(DimensionMismatch);
MINTWIST_ERROR(SpecMismatch);
MINTWIST_ERROR(NoRealStructure);
MINTWIST_ERROR(NoGrading);
MINTWIST_ERROR(InvalidTwistOperator);
MINTWIST_ERROR(NotFaithful);
MINTWIST_ERROR(NotAOneForm);
MINTWIST_ERROR(NoHermitianInvertible);
MINTWIST_ERROR(Singular);
MINTWIST_ERROR(Unsupported);
MINTWIST_ERROR(InvalidMass);
MINTWIST_ERROR(SchemaError);
MINTWIST_ERROR(MatrixShapeError);
MINTWIST_ERROR(UnknownModel);

#undef MINTWIST_ERROR

}  // namespace mintwist
