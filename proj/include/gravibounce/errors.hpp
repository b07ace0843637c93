#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gravibounce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation
/// (non-finite input, k == n, upward transition, bad index).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to reach its tolerance.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double last_value, double error_estimate)
      : Error(what), last_value_(last_value), error_estimate_(error_estimate) {}

  /// Last iterate (root finders) or last integral estimate (quadrature).
  double last_value() const noexcept { return last_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double last_value_;
  double error_estimate_;
};

/// Malformed or invalid constants file.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line, std::string key)
      : Error(what), line_(line), key_(std::move(key)) {}

  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::size_t line_;
  std::string key_;
};

}  // namespace gravibounce
