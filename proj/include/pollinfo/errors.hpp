#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pollinfo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid analysis settings (log base, exponents, tolerance).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero in I = 1/S or in a Fisher term under SingularityPolicy::Error.
class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what,
                            std::optional<long> t = std::nullopt,
                            std::optional<std::size_t> index = std::nullopt)
      : Error(what), t_(t), index_(index) {}

  std::optional<long> t() const noexcept { return t_; }
  /// Zero-based position i of the offending Fisher term p_i, if any.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<long> t_;
  std::optional<std::size_t> index_;
};

/// A raw percentage row that cannot become a distribution.
class IngestionError : public Error {
 public:
  explicit IngestionError(const std::string& what, std::optional<long> t = std::nullopt)
      : Error(what), t_(t) {}

  std::optional<long> t() const noexcept { return t_; }

 private:
  std::optional<long> t_;
};

/// Malformed poll CSV or report JSON. Line numbers are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computed result violated a bound that must always hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace pollinfo
