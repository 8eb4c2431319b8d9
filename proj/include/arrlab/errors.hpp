#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition was violated (bad parameter, field mismatch, ...).
struct ValueError : Error {
    using Error::Error;
};

/// Text or JSON input could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// A configurable computation budget was exceeded.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace arrlab
