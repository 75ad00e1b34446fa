#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealkit {

enum class ErrorKind {
  DivisionByZero,
  BadReduction,
  NotPrime,
  TableMismatch,
  ZeroPolynomial,
  NotBihomogeneous,
  NonDivisible,
  ZeroDivisor,
  SyntaxError,
  UnknownVariable,
  ZeroDenominator,
  IoError,
  DuplicateName,
  ResourceLimit,
  CapExceeded,
  NotLinear,
  FixtureMissing,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the toolkit. The kind is what callers
/// (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string source, std::size_t line, std::size_t column,
              std::string message, std::vector<std::string> expected = {});

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Raised by bidegree/dehomogenize; carries the printed offending terms.
class NotBihomogeneousError : public Error {
 public:
  explicit NotBihomogeneousError(std::vector<std::string> offending);
  const std::vector<std::string>& offending_terms() const noexcept {
    return offending_;
  }

 private:
  std::vector<std::string> offending_;
};

}  // namespace idealkit
