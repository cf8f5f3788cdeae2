#pragma once

#include <stdexcept>
#include <string>

namespace obslab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The caller handed us something malformed (bad interval, bad state,
/// invalid witness, ...).  CLI maps these to exit code 1.
struct InvalidInput : Error {
    using Error::Error;
};

/// A numerical procedure failed to reach its target accuracy.  CLI maps
/// these to exit code 2.
struct NumericalFailure : Error {
    using Error::Error;
};

struct BadInterval : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct BadState : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotRankOne : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct WitnessInvalid : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct EpsilonTooLarge : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct GridTooCoarse : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct TailTooLarge : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InvalidPhaseMatrix : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// Eigen/singular values cluster at the rank cut; the reported rank is not
/// trustworthy at the requested tolerance.
struct DegenerateTolerance : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

struct QuadratureNotConverged : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

struct ImaginaryResidue : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

}  // namespace obslab
