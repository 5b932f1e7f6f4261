#pragma once

#include <stdexcept>
#include <string>

namespace paramcost {

// Error taxonomy. The CLI maps these onto exit codes: validation-class
// failures exit 1, I/O failures exit 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric argument violates an operation's domain (non-positive size,
// zero productivity rate, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Structured input is malformed: bad rating name, corpus row violating an
// invariant, unknown model selector.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A lookup table lacks a required entry or a config file carries keys the
// schema does not define.
class ConfigError : public Error {
public:
    using Error::Error;
};

// File could not be opened/read/written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace paramcost
