#pragma once

#include <stdexcept>
#include <string>

namespace perind {

// Structurally bad input (dimension mismatch, unparsable data).
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is well-formed but outside the supported domain.
struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A step that is guaranteed to succeed by a theorem failed.
// The computation cannot be trusted any further; abort loudly.
[[noreturn]] void invariant_violation(const std::string& what);

}  // namespace perind
