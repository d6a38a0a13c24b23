#pragma once

#include <stdexcept>
#include <string>

namespace klab {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction / indexing.
struct IndexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct MissingDeficit : Error { using Error::Error; };

// Sampling and switching.
struct OddProduct : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct RetryBudgetExceeded : Error { using Error::Error; };
struct NotSwitchable : Error { using Error::Error; };
struct BallTooLarge : Error { using Error::Error; };
struct InvalidData : Error { using Error::Error; };

// Spectral parameters and analytic kernels.
struct NotUpperHalfPlane : Error { using Error::Error; };
struct UnrealizableGeometry : Error { using Error::Error; };
struct SeriesDiverging : Error { using Error::Error; };

// Linear algebra.
struct SizeCapExceeded : Error { using Error::Error; };
struct SolveFailed : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct ZeroDiagonal : Error { using Error::Error; };
struct EigFailed : Error { using Error::Error; };

// Walk counting.
struct Overflow : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// Experiment configuration.
struct EmptyDomain : Error { using Error::Error; };
struct NotCentered : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace klab
