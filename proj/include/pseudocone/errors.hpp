#pragma once

#include <stdexcept>
#include <string>

namespace pseudocone {

// Base for all library failures; callers that want one catch-all use this.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable cap (codeword enumeration, ray enumeration, stopping search)
// would be exceeded.  The CLI turns these into exit code 2 with a partial report.
struct DimensionTooLarge : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ZeroMatrix : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct NegativeCoordinate : Error {
    using Error::Error;
};
struct ZeroRow : Error {
    using Error::Error;
};
struct InvalidR : Error {
    using Error::Error;
};
struct GirthTooSmall : Error {
    using Error::Error;
};
struct InvalidGamma : Error {
    using Error::Error;
};
struct NotADivisor : Error {
    using Error::Error;
};
struct NonPositiveSigma : Error {
    using Error::Error;
};
struct RowWeightTooLarge : Error {
    using Error::Error;
};
struct InconsistentInputs : Error {
    using Error::Error;
};

// Raised when a certified bound-tightness statement is violated by an actual
// ray.  Mathematically impossible if the implementation is correct, so this
// is the primary self-test signal; the message carries the offending ray.
struct TheoremFalsification : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

struct InconsistentAdjacency : Error {
    using Error::Error;
};

}  // namespace pseudocone
