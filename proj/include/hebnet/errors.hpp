#pragma once

#include <stdexcept>
#include <string>

namespace hebnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// topology
struct IndexOutOfRange : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct ZeroCoefficient : Error { using Error::Error; };

// shared
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// analysis
struct NonSquare : Error { using Error::Error; };
struct NonSquareDiagonalBlock : Error { using Error::Error; };
struct NotMetzler : Error { using Error::Error; };
struct ReducibleWithZeroDelta : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct UnsupportedExponent : Error { using Error::Error; };

// simulation
struct UnstableStep : Error { using Error::Error; };
struct NonFiniteState : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct DegenerateWindow : Error { using Error::Error; };
struct NonSymmetricH : Error { using Error::Error; };
struct TrajectoryTooShort : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };
struct UnknownParam : Error { using Error::Error; };
struct EmptyRange : Error { using Error::Error; };

} // namespace hebnet
