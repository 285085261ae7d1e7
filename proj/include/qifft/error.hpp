#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qifft {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

// Transform or table size rejected (zero, or not a power of two where one is required).
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::size_t size) : Error(what), size_(size) {}

  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
};

// Malformed syntax in a signal file. line and column are 1-based; column 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed syntax but content violating the signal schema.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
  ValidationError(const std::string& what, std::size_t sample)
      : Error("validation error at sample " + std::to_string(sample) + ": " + what),
        sample_(sample) {}

  std::optional<std::size_t> sample() const noexcept { return sample_; }

 private:
  std::optional<std::size_t> sample_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

}  // namespace qifft
