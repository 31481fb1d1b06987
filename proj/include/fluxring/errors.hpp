#pragma once

#include <stdexcept>
#include <string>

namespace fluxring {

// Physics or argument-domain violation: non-positive charge, T >= T_c where a
// condensate is required, divergent London depth, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown where a pair density is requested at or above T_c.
class NoCondensateError : public DomainError {
public:
    using DomainError::DomainError;
};

// Inconsistent configuration: regime/geometry mismatch, bad duty cycle,
// unknown config keys, malformed values.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Command-line problems: unknown command or flag, malformed or missing value.
class UsageError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fluxring
