#pragma once

#include <stdexcept>
#include <string>

namespace latval {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("point set is empty") {}
};

struct AmbientDimTooLarge : Error {
  explicit AmbientDimTooLarge(int d)
      : Error("ambient dimension " + std::to_string(d) + " exceeds the supported maximum of 6") {}
};

struct EmptyFace : Error {
  EmptyFace() : Error("face is empty") {}
};

struct DegenerateProjection : Error {
  DegenerateProjection() : Error("projection lies on the boundary between two face regions") {}
};

struct InconsistentValues : Error {
  using Error::Error;
};

struct IllConditioned : Error {
  using Error::Error;
};

struct NoWitnessFound : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace latval
