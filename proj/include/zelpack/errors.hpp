#pragma once

#include <stdexcept>

namespace zelpack {

// Base of every domain error; the CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// end - base is not a nonnegative integer
struct BadSegment : Error {
  using Error::Error;
};

// segment endpoints spread over more than one Z-coset of half-integers
struct MultiCosetSupport : Error {
  using Error::Error;
};

// binary operation on operands whose supports differ
struct SupportMismatch : Error {
  using Error::Error;
};

// segment endpoints fall outside the exponent chain of a support
struct SegmentOutsideSupport : Error {
  using Error::Error;
};

// rank data that is malformed or breaks the rank constraints
struct InvalidTriangle : Error {
  using Error::Error;
};

// operation defined only for simple multisegments
struct NotSimple : Error {
  using Error::Error;
};

}  // namespace zelpack
