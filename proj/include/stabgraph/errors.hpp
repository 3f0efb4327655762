#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf2_linalg: invert() on a singular matrix, or a singular basis change.
struct SingularError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

// Bad Pauli symbol, length mismatch, malformed file.
struct ParseError : Error {
    using Error::Error;
};

// Qubit/vertex index out of range or duplicate two-qubit targets.
struct IndexError : Error {
    using Error::Error;
};

struct InvalidCodeError : Error {
    using Error::Error;
};

// derive_input_block: x_support rows do not have the required rank.
struct RankError : Error {
    using Error::Error;
};

// attach_inputs: one of the attachment conditions i-iii is violated.
struct ConditionError : Error {
    ConditionError(int which_, const std::string& msg) : Error(msg), which(which_) {}
    int which;  // 1, 2 or 3
};

// ensure_singular: no singular graph within the configured orbit bound.
struct SearchExhaustedError : Error {
    SearchExhaustedError(std::size_t bound_, const std::string& msg) : Error(msg), bound(bound_) {}
    std::size_t bound;
};

// codespace_from_cws: codewords are not orthonormal (upstream standardization bug).
struct NotOrthogonalError : Error {
    using Error::Error;
};

struct TooManyQubitsError : Error {
    using Error::Error;
};

// Invalid coincidence matrix or unknown export format.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace stabgraph
