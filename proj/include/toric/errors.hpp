#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// Problems with user-supplied input: malformed documents, unknown builtin
/// names, cones that are not strictly convex. CLI maps these to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct UnknownBuiltin : InputError {
    using InputError::InputError;
};

struct NotStrictlyConvex : InputError {
    using InputError::InputError;
};

/// A fan that fails validation; carries the full list of violations.
struct ValidationError : InputError {
    ValidationError(const std::string& msg, std::vector<std::string> violations_)
        : InputError(msg), violations(std::move(violations_))
    {
    }

    std::vector<std::string> violations;
};

/// Internal invariants that should hold by construction. Hitting one of these
/// signals a bug (e.g. an orientation error upstream). CLI exit code 2.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CompositionNotZero : InvariantError {
    using InvariantError::InvariantError;
};

struct ResolutionFailure : InvariantError {
    using InvariantError::InvariantError;
};

struct NotFacet : InvariantError {
    using InvariantError::InvariantError;
};

struct ConeNotInFan : InvariantError {
    using InvariantError::InvariantError;
};

struct SolveError : InvariantError {
    using InvariantError::InvariantError;
};

}  // namespace toric
