#pragma once

#include <stdexcept>
#include <string>

namespace gws {

// Error taxonomy mirrors the CLI exit codes: ConfigError -> 2 (bad input or
// usage), PhysicsError -> 3 (valid input, no physical answer), anything
// else -> 4 (internal).

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class PhysicsError : public Error {
 public:
  using Error::Error;
};

class MissingField : public ConfigError {
 public:
  explicit MissingField(const std::string& key)
      : ConfigError("missing required config field: " + key) {}
};

class NonPositiveWidth : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class EnergyBelowGate : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class OutOfDomain : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class StepTooLarge : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InsufficientPoints : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonPositiveFrequency : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NoModesFound : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class ModeNotFound : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class ZeroCoupling : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class NonHermitian : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

}  // namespace gws
