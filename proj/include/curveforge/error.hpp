#pragma once

#include <stdexcept>
#include <string>

namespace curveforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: non-prime characteristic, bad family parameters, P = Q, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// A requested field order (or derived work size) exceeds the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Operands live in different fields and no embedding was supplied.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Division or inversion by zero, singular matrices.
class ZeroDivision : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (curve, arc, and generator-matrix files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace curveforge
