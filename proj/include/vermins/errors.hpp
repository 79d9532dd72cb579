#pragma once

#include <stdexcept>
#include <string>

namespace vermins {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A network file (or flag value) could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

// A structurally parsed network violates a model invariant.
struct ValidationError : Error {
    using Error::Error;
};

struct DimensionMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

// Source and sink coincide geometrically; the ideal route is undefined.
struct DegenerateGeometryError : ValidationError {
    using ValidationError::ValidationError;
};

struct MixedProvenanceError : ValidationError {
    using ValidationError::ValidationError;
};

struct IndexOutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};

struct SourceEqualsSinkError : ValidationError {
    using ValidationError::ValidationError;
};

// No simple path connects source to sink.
struct NoRouteError : Error {
    using Error::Error;
};

// Simple-path enumeration exceeded its route budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// An operation that needs Euclidean lengths was given an explicit-weights network.
struct CoordinatesRequiredError : Error {
    using Error::Error;
};

} // namespace vermins
