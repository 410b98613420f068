#pragma once

#include <stdexcept>
#include <string>

namespace saat {

// One exception family per subsystem so callers (and the CLI's exit-code
// mapping) can tell domain failures apart from programming errors.
class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DeviceModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrialLogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FrontError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModeSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when threshold filtering leaves no candidate configuration.
class EmptyAfterFilterError : public ModeSpecError {
 public:
  using ModeSpecError::ModeSpecError;
};

class FsmSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saat
