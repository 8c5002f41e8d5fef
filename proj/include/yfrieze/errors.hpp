#pragma once

#include <stdexcept>
#include <string>

namespace yfrieze {

// Base class for every error raised by the library. `code()` is the stable
// machine-readable name used in CLI JSON error reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept { return "Error"; }
};

#define YFRIEZE_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        using Error::Error;                                          \
        const char* code() const noexcept override { return #Name; } \
    }

YFRIEZE_DEFINE_ERROR(ParseError);
YFRIEZE_DEFINE_ERROR(NotCartan);
YFRIEZE_DEFINE_ERROR(NotSymmetrizable);
YFRIEZE_DEFINE_ERROR(NotSkewSymmetrizable);
YFRIEZE_DEFINE_ERROR(NotFiniteType);
YFRIEZE_DEFINE_ERROR(UnrecognizedLabelling);
YFRIEZE_DEFINE_ERROR(MixedSemirings);
YFRIEZE_DEFINE_ERROR(DivisionFailure);
YFRIEZE_DEFINE_ERROR(DivideByZero);
YFRIEZE_DEFINE_ERROR(PoleAtPoint);
YFRIEZE_DEFINE_ERROR(WindowTooNarrow);
YFRIEZE_DEFINE_ERROR(DimensionMismatch);

// Raised when a proven structural property (Laurent positivity, a belt
// identity) fails. Indicates a bug in this library, never bad input.
YFRIEZE_DEFINE_ERROR(InvariantViolation);

#undef YFRIEZE_DEFINE_ERROR

} // namespace yfrieze
