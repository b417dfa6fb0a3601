#pragma once

#include <stdexcept>
#include <string>

namespace rroch {

// Base class for every error the engine raises on a violated precondition.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion requested for an element whose constant part is not a unit.
struct NonUnit : Error {
    using Error::Error;
};

// A multiplicative extension hit a negative power of a non-unit factor.
struct NonUnitFactor : NonUnit {
    using NonUnit::NonUnit;
};

// Series composition f(g) with g(0) != 0.
struct CompositionConstantTerm : Error {
    using Error::Error;
};

// A parameter is outside its admissible range (j = 0, p = 1 for a twisted
// series, and so on).
struct BadParam : Error {
    using Error::Error;
};

// A truncation order is too small for the requested computation.
struct BadOrder : Error {
    using Error::Error;
};

// Two values with different nilpotency orders were mixed in one computation.
struct OrderMismatch : Error {
    using Error::Error;
};

// An operation specific to one theory was invoked on the other.
struct WrongTheory : Error {
    using Error::Error;
};

// Operands live in different rings, or a morphism was applied to an element
// of the wrong ring.
struct RingMismatch : Error {
    using Error::Error;
};

// A normal bundle (or another immersion-only datum) was requested for a
// morphism that is not an immersion.
struct NotImmersion : Error {
    using Error::Error;
};

// The two routes of the Newton cross-computation disagree.
struct NewtonMismatch : Error {
    using Error::Error;
};

// A triangular solve could not be completed (defensive; cannot happen for
// well-formed inputs).
struct SolveFailure : Error {
    using Error::Error;
};

} // namespace rroch
