#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotATrace : Error { using Error::Error; };
struct NotIdempotent : Error { using Error::Error; };
struct LevelMismatch : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct ClosureError : Error { using Error::Error; };
struct DivisibilityError : Error { using Error::Error; };
struct SingularityError : Error { using Error::Error; };
struct InsufficientZeros : Error { using Error::Error; };
struct ConditionsViolated : Error { using Error::Error; };
struct NotCovariant : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };
struct CheckFailed : Error { using Error::Error; };

}  // namespace adelic
