#pragma once

#include <stdexcept>
#include <string>

namespace dw {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (JSON syntax, missing fields, bad shapes).
struct ParseError : Error {
    using Error::Error;
};

// Gluing table is not a closed pseudo-manifold (involution broken,
// missing entries, face glued to itself).
struct GluingError : Error {
    using Error::Error;
};

// An edge orbit identifies an edge with itself reversing direction;
// the quotient is not a manifold near that edge.
struct EdgeOrientationError : Error {
    using Error::Error;
};

struct NonOrientableError : Error {
    using Error::Error;
};

// Pachner move preconditions.
struct FaceSelfAdjacentError : Error {
    using Error::Error;
};
struct EdgeNotTrivalentError : Error {
    using Error::Error;
};
struct TetrahedraNotDistinctError : Error {
    using Error::Error;
};

// make_orderable ran out of moves without finding a local order.
struct SearchExhaustedError : Error {
    using Error::Error;
};

struct NotACocycleError : Error {
    using Error::Error;
};

// Mixed-modulus arithmetic where lifting was disabled.
struct ModulusMismatchError : Error {
    using Error::Error;
};

} // namespace dw
