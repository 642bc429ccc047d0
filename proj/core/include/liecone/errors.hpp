#pragma once

#include <stdexcept>
#include <string>

namespace liecone {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIECONE_DEFINE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

LIECONE_DEFINE_ERROR(DimensionMismatch)
LIECONE_DEFINE_ERROR(IndexOutOfRange)
LIECONE_DEFINE_ERROR(SingularMatrix)
LIECONE_DEFINE_ERROR(NotNilpotent)
LIECONE_DEFINE_ERROR(NotLieAlgebra)
LIECONE_DEFINE_ERROR(ParseError)
LIECONE_DEFINE_ERROR(MissingParameter)
LIECONE_DEFINE_ERROR(UnknownName)
LIECONE_DEFINE_ERROR(NotSolvable)
LIECONE_DEFINE_ERROR(NotCompletelySolvable)
LIECONE_DEFINE_ERROR(IrrationalEigenvalue)
LIECONE_DEFINE_ERROR(PreconditionFailed)
LIECONE_DEFINE_ERROR(InvalidCertificate)
LIECONE_DEFINE_ERROR(NonIntegralExponent)
LIECONE_DEFINE_ERROR(NegativeWeight)

#undef LIECONE_DEFINE_ERROR

}  // namespace liecone
