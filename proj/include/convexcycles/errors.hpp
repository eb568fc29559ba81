#pragma once

#include <stdexcept>
#include <string>

namespace convexcycles {

// Base of every error raised by the library. Subclasses name the failure so
// callers can branch on type; the CLI maps ConsistencyViolation to its own
// exit code and everything else to "bad input".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CONVEXCYCLES_DEFINE_ERROR(Name)       \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

CONVEXCYCLES_DEFINE_ERROR(InvalidEdge);
CONVEXCYCLES_DEFINE_ERROR(DuplicateEdge);
CONVEXCYCLES_DEFINE_ERROR(OutOfRange);
CONVEXCYCLES_DEFINE_ERROR(ParseError);
CONVEXCYCLES_DEFINE_ERROR(InvalidParameter);
CONVEXCYCLES_DEFINE_ERROR(Disconnected);
CONVEXCYCLES_DEFINE_ERROR(InvalidCycle);
CONVEXCYCLES_DEFINE_ERROR(NotApplicable);
CONVEXCYCLES_DEFINE_ERROR(InconsistentInput);

// A theorem-level check failed. This always indicates a bug in the library,
// never a property of the input graph.
CONVEXCYCLES_DEFINE_ERROR(ConsistencyViolation);

#undef CONVEXCYCLES_DEFINE_ERROR

}  // namespace convexcycles
