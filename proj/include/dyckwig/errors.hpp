#pragma once

#include <stdexcept>
#include <string>

namespace dyckwig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class MissingVariable : public Error {
public:
    explicit MissingVariable(unsigned var)
        : Error("no value assigned to variable u" + std::to_string(var)), variable(var) {}
    unsigned variable;
};

class InvalidWord : public Error {
public:
    using Error::Error;
};

class DuplicateNodes : public Error {
public:
    using Error::Error;
};

/// Raised when a request exceeds the configured computation bounds.
class CostGuard : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dyckwig
