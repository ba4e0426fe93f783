#pragma once

#include <stdexcept>
#include <string>

namespace arcrec {

// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arcset
struct DegenerateArc final : Error { using Error::Error; };

// series
struct DegreeMismatch final : Error { using Error::Error; };
struct NearZeroConstantTerm final : Error { using Error::Error; };
struct ConformalPole final : Error { using Error::Error; };
struct OutsideDisk final : Error { using Error::Error; };

// toeplitz / polyroot
struct NoConvergence final : Error { using Error::Error; };
struct EmptyEigenspace final : Error { using Error::Error; };
struct OffCircleRoot final : Error { using Error::Error; };

// blaschke
struct NonAlternatingRoots final : Error { using Error::Error; };
struct NotUnimodularOnCircle final : Error { using Error::Error; };
struct PoleInDisk final : Error { using Error::Error; };

// recovery
struct DegenerateFormula final : Error { using Error::Error; };
struct RoundTripFailure final : Error { using Error::Error; };

}  // namespace arcrec
