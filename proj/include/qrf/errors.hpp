#pragma once

#include <stdexcept>
#include <string>

namespace qrf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QRF_DECLARE_ERROR(Name)           \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

QRF_DECLARE_ERROR(InvalidArgument);
QRF_DECLARE_ERROR(ConstraintViolation);
QRF_DECLARE_ERROR(SameFrame);
QRF_DECLARE_ERROR(InvalidStep);
QRF_DECLARE_ERROR(UnknownAxis);
QRF_DECLARE_ERROR(GridMismatch);
QRF_DECLARE_ERROR(NonHermitianObservable);
QRF_DECLARE_ERROR(AxisClash);
QRF_DECLARE_ERROR(TooLarge);
QRF_DECLARE_ERROR(KOutOfRange);
QRF_DECLARE_ERROR(FrameMismatch);
QRF_DECLARE_ERROR(UnsupportedObservable);
QRF_DECLARE_ERROR(InvalidDensityMatrix);
QRF_DECLARE_ERROR(ConfigError);
QRF_DECLARE_ERROR(NumericalFailure);
QRF_DECLARE_ERROR(UnknownFigure);

#undef QRF_DECLARE_ERROR

}  // namespace qrf
