#pragma once

#include <stdexcept>
#include <string>

namespace tdcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside an operation's domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A field modulus is reducible, non-primitive, or of an unsupported size.
class FieldError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the caller's evaluation cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace tdcodes
