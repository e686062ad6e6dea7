#pragma once

#include <stdexcept>
#include <string>

namespace hwlab {

// Base for all domain errors thrown by the library. The CLI maps these to
// exit code 3 (preconditions) or 4 (tolerance/convergence); parse problems
// use ParseError -> exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityError : Error { using Error::Error; };
struct PositivityError : Error { using Error::Error; };
struct DistinctnessError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };
struct SingularSystemError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct CollisionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Numerical failures (requested tolerance not certified / iteration cap hit).
struct ToleranceError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

} // namespace hwlab
