#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace awnev {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression parser: malformed input. `offset` is the byte offset of the
// first offending character.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Expression parser: `^` applied with a negative or fractional exponent.
struct ExponentError : Error {
    std::size_t offset;
    ExponentError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Operation asked about the identically-zero function (order/roots undefined).
struct ZeroFunctionError : Error {
    using Error::Error;
};

// Division by the zero polynomial / zero rational function.
struct ZeroDenominatorError : Error {
    using Error::Error;
};

// Quotient-style Wronskian identity requested with vanishing leading entry.
struct ZeroDivisorError : Error {
    using Error::Error;
};

// Query point lies inside the shift-operator guard radius.
struct GuardViolation : Error {
    using Error::Error;
};

// Too many quadrature nodes needed perturbation away from singularities.
struct QuadratureDegenerate : Error {
    using Error::Error;
};

// The curve lies inside the hypersurface (Q(f) identically zero).
struct CurveInHypersurface : Error {
    using Error::Error;
};

// Mismatched sizes (e.g. more bins than factors).
struct BadArity : Error {
    using Error::Error;
};

// Exhaustive enumeration refused: input above the hard size cutoff.
struct TooLarge : Error {
    using Error::Error;
};

// Polynomial decomposition requested with fewer distinct factors than bins.
struct NotEnoughFactors : Error {
    using Error::Error;
};

// Position check needs more forms than were supplied.
struct TooFew : Error {
    using Error::Error;
};

// Curve components are linearly dependent.
struct DependentCurve : Error {
    using Error::Error;
};

// Hypersurfaces failed the required position check.
struct PositionFailed : Error {
    using Error::Error;
};

// Theorem hypothesis violated; margins must not be computed.
struct HypothesisFailed : Error {
    using Error::Error;
};

// Interval arithmetic too coarse to certify a floor/ceiling or bound.
struct CertificationError : Error {
    using Error::Error;
};

// Invalid argument values (tolerances, ranges, malformed JSON, ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace awnev
