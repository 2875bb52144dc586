#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclestab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments / infeasible parameters.
struct ParamError : Error {
    using Error::Error;
};

// An exhaustive routine was asked to exceed its configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// File / stream problems (used by the CLI layer).
struct IoError : Error {
    using Error::Error;
};

// Malformed serialized input; carries the byte offset of the first bad byte.
struct FormatError : Error {
    FormatError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// A checked invariant or verification property failed.
struct PropertyError : Error {
    using Error::Error;
};

}  // namespace cyclestab
