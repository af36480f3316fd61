#pragma once

#include <stdexcept>
#include <string>

namespace chebcurve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument: non-prime characteristic, index out of range, zero divisor.
struct DomainError : Error {
  using Error::Error;
};

// Operands belong to different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

// An enumeration or extension search would exceed the configured limits.
struct CapExceeded : Error {
  using Error::Error;
};

// A standing hypothesis of the construction (e.g. char does not divide 2d) fails.
struct HypothesisViolation : Error {
  using Error::Error;
};

// Something that a theorem guarantees did not happen. Always a bug or a
// misuse that slipped past precondition checks.
struct InvariantBreach : Error {
  using Error::Error;
};

}  // namespace chebcurve
