#pragma once

#include <stdexcept>
#include <string>

namespace fpetpf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A flow state stopped being physically meaningful (rho <= 0 or p <= 0).
/// Carries the flat node index where the violation was detected.
struct NonPhysicalState : Error {
    explicit NonPhysicalState(const std::string& what, long node_index = -1)
        : Error(what), node(node_index) {}
    long node;
};

/// Requested time step exceeds the stability bound of the scheme.
struct CflViolation : Error {
    using Error::Error;
};

/// Malformed argument (shape mismatch, degenerate sequence, bad coefficient).
struct InvalidInput : Error {
    using Error::Error;
};

/// An alignment path violating the mapping rules was supplied.
struct InvalidPath : Error {
    using Error::Error;
};

/// Two states that must share a time stamp do not.
struct TimeMismatch : Error {
    using Error::Error;
};

/// Bad experiment configuration (unknown key, invalid value, failed sampling).
struct ConfigError : Error {
    using Error::Error;
};

/// Every particle received zero likelihood; the weight update is undefined.
struct AllZeroLikelihood : Error {
    using Error::Error;
};

/// The Riemann problem has no solution with positive density.
struct VacuumFormation : Error {
    using Error::Error;
};

/// An iterative numerical procedure failed to converge.
struct NumericalFailure : Error {
    using Error::Error;
};

}  // namespace fpetpf
