#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tstates {

// Root of every exception thrown by the library. `kind()` is a stable
// machine-readable tag used by the CLI for structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message, std::string kind = "parse_error")
      : Error(std::move(kind), "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfContactError : public ParseError {
 public:
  SelfContactError(std::size_t line, const std::string& node)
      : ParseError(line, "self-contact on node '" + node + "'", "self_contact") {}
};

class GridError : public Error {
 public:
  explicit GridError(const std::string& message) : Error("grid_mismatch", message) {}
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& message) : Error("invalid_input", message) {}
};

class InvalidWindowError : public Error {
 public:
  explicit InvalidWindowError(const std::string& message) : Error("invalid_window", message) {}
};

class InvalidMatrixError : public Error {
 public:
  explicit InvalidMatrixError(const std::string& message) : Error("invalid_matrix", message) {}
};

class InvalidResolutionError : public Error {
 public:
  explicit InvalidResolutionError(const std::string& message)
      : Error("invalid_resolution", message) {}
};

class ScheduleError : public Error {
 public:
  explicit ScheduleError(const std::string& message) : Error("schedule_error", message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("config_error", message) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& message) : Error("numerical_error", message) {}
};

}  // namespace tstates
