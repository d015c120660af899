#pragma once

#include <stdexcept>
#include <string>

namespace rlnc {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient matrix has rank below the generation size.
struct SingularMatrix : Error {
    using Error::Error;
};

/// The received coefficient rows cannot recover the source blocks.
struct UndecodableGeneration : Error {
    using Error::Error;
};

/// Zero-length frame handed to the splitter.
struct EmptyFrame : Error {
    using Error::Error;
};

/// No route between the requested node pair.
struct NoPath : Error {
    using Error::Error;
};

/// Conditional expectation requested but the conditioning event has probability zero.
struct DegenerateConditioning : Error {
    using Error::Error;
};

/// Relative reduction undefined because the baseline expectation is zero.
struct DegenerateBaseline : Error {
    using Error::Error;
};

/// Fewer available paths than the requested path-set size.
struct InsufficientPaths : Error {
    using Error::Error;
};

/// Every replication of a scenario was blocked.
struct AllBlocked : Error {
    using Error::Error;
};

/// Encoder exhausted its coefficient redraw budget (broken randomness source).
struct RedrawLimitExceeded : Error {
    using Error::Error;
};

/// Malformed topology file.
struct TopologyError : Error {
    using Error::Error;
};

}  // namespace rlnc
