#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Process exit codes used by the CLI. Library errors carry the code they
// map to so the tool does not have to know every error type.
enum class ExitCode : int {
  ok = 0,
  config = 2,   // malformed or invalid configuration
  numeric = 3,  // failure during a numerical run
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, ExitCode code)
      : std::runtime_error(msg), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg, ExitCode::config) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg)
      : Error(msg, ExitCode::numeric) {}
};

// Configuration-class failures.
struct ParseError : ConfigError {
  using ConfigError::ConfigError;
};
struct ValidationError : ConfigError {
  using ConfigError::ConfigError;
};
struct ConfigInvalid : ConfigError {
  using ConfigError::ConfigError;
};

// Numerical-run failures.
struct OutOfSchedule : NumericError {
  using NumericError::NumericError;
};
struct StepUnstable : NumericError {
  using NumericError::NumericError;
};
struct NotHermitian : NumericError {
  using NumericError::NumericError;
};
struct NotReached : NumericError {
  using NumericError::NumericError;
};
struct WindowEmpty : NumericError {
  using NumericError::NumericError;
};
struct NonPositiveSamples : NumericError {
  using NumericError::NumericError;
};
struct NotDecaying : NumericError {
  using NumericError::NumericError;
};

}  // namespace zeno
