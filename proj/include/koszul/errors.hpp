#ifndef KOSZUL_ERRORS_HPP
#define KOSZUL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A would-be edge (v, v).
struct LoopEdgeError : Error {
    using Error::Error;
};

// A vertex or variable index outside the host range.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// A size limit (vertex cap, Betti cap, enumeration cap) was exceeded.
struct CapExceededError : Error {
    using Error::Error;
};

// Bad text input other than graph6 (edge lists, JSON documents).
struct MalformedInputError : Error {
    using Error::Error;
};

// Bad graph6 input; `offset` is the byte position of the defect.
struct MalformedGraph6Error : Error {
    MalformedGraph6Error(const std::string& what, std::size_t offset_)
        : Error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

// A pattern witness of the wrong kind was handed to an operation.
struct WrongPatternKindError : Error {
    using Error::Error;
};

// Two routes that must agree disagreed.  Signals an implementation bug
// or a flagged anomaly, never an expected outcome.
struct EquivalenceViolationError : Error {
    using Error::Error;
};

// An internal cross-check failed.  Always a bug guard.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

} // namespace koszul

#endif
