#pragma once

#include <stdexcept>
#include <string>

namespace tfim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument / violated precondition (maps to CLI exit code 3).
struct InvalidArgument : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// A momentum mode with Lambda_k ~ 0 (PaperOdd grid at lambda = 1 contains k = pi).
struct DegenerateMode : Error {
    using Error::Error;
};

// A sampled order of the fast determinant recursion disagrees with pivoted
// elimination beyond tolerance.
struct CrossCheckFailure : Error {
    using Error::Error;
};

struct MissingCorrelators : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct NonPositiveData : Error {
    using Error::Error;
};

struct PeakOnBoundary : Error {
    using Error::Error;
};

struct NoOverlap : Error {
    using Error::Error;
};

struct WindowTooClose : Error {
    using Error::Error;
};

struct DegenerateGroundState : Error {
    using Error::Error;
};

}  // namespace tfim
