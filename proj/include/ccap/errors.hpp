#pragma once

#include <stdexcept>
#include <string>

namespace ccap {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller passed arguments outside an operation's contract.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A constraint set failed a structural requirement (length-1 word, unreduced
// input where a reduced set is required, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// An enumeration or matrix computation would exceed the configured budget.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// An invariant that the algorithms guarantee was observed to fail; always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Malformed constraint-spec documents or CLI input.
class ParseError : public InputError {
public:
    explicit ParseError(const std::string& msg) : InputError(msg) {}
};

} // namespace ccap
