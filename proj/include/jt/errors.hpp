#pragma once

#include <stdexcept>
#include <string>

namespace jt {

// Precondition failures on caller input (CLI exit code 2).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input (CLI exit code 3).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant; never a valid input state.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace jt
