#ifndef FEDTRAJ_ERRORS_HPP
#define FEDTRAJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fedtraj {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- data model / parsing ----

struct OutOfRangeCoordinate : Error {
    using Error::Error;
};

struct MalformedRecord : Error {
    MalformedRecord(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct InvertedInterval : Error {
    using Error::Error;
};

struct EmptyTrajectory : Error {
    using Error::Error;
};

// ---- tensor engine ----

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NonFiniteValue : Error {
    using Error::Error;
};

struct GraphConsumed : Error {
    using Error::Error;
};

struct MissingGradient : Error {
    using Error::Error;
};

struct AllMasked : Error {
    using Error::Error;
};

// ---- training / federation ----

struct EmptyDataset : Error {
    using Error::Error;
};

struct TooFewSegments : Error {
    using Error::Error;
};

struct SchemaMismatch : Error {
    using Error::Error;
};

struct EmptyUpdateSet : Error {
    using Error::Error;
};

// ---- anonymizers / evaluation ----

struct InsufficientNonsensitivePoints : Error {
    using Error::Error;
};

struct NoOverlap : Error {
    using Error::Error;
};

struct MissingLinkage : Error {
    using Error::Error;
};

// ---- experiment driver ----

struct MissingInput : Error {
    using Error::Error;
};

struct UnknownMethod : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace fedtraj

#endif // FEDTRAJ_ERRORS_HPP
