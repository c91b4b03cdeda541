#pragma once

#include <stdexcept>
#include <string>

namespace coex {

// Bad argument to an otherwise supported operation (x == y, c out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition about the inputs' combinatorial structure failed,
// e.g. roots that do not induce the flag's type.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Request exceeds the exhaustive-search scope of this library.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction or user-supplied structure violates a named rule.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (graph strings, rationals, pair lists).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace coex
