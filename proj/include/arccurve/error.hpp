#pragma once

#include <stdexcept>
#include <string>

namespace arccurve {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain (exit code 2).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public InvalidInput {
public:
    DivisionByZero() : InvalidInput("division by zero in finite field") {}
};

// Operation not defined for this characteristic / field shape (exit code 2).
class Unsupported : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Data parsed fine but failed a mathematical check (exit code 3).
class ValidationError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug (exit code 1).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace arccurve
