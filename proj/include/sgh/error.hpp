#pragma once

#include <stdexcept>
#include <string>

namespace sgh {

/// Base of every error raised by the library.
struct Error : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input (rationals, addresses, edge names).
struct ParseError : Error {
    using Error::Error;
};

/// An operation was called outside its precondition.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace sgh
