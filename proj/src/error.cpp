#include "idealkit/error.hpp"

#include <sstream>

namespace idealkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotBihomogeneous: return "NotBihomogeneous";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::FixtureMissing: return "FixtureMissing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_syntax(const std::string& source, std::size_t line,
                          std::size_t column, const std::string& message,
                          const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << (source.empty() ? "<input>" : source) << ':' << line << ':' << column
      << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out << (i + 1 == expected.size() ? " or " : ", ");
      out << expected[i];
    }
    out << ')';
  }
  return out.str();
}

std::string format_offending(const std::vector<std::string>& offending) {
  std::string out = "polynomial is not bihomogeneous; offending terms:";
  for (const auto& t : offending) out += " " + t + ";";
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::string source, std::size_t line,
                         std::size_t column, std::string message,
                         std::vector<std::string> expected)
    : Error(ErrorKind::SyntaxError,
            format_syntax(source, line, column, message, expected)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

NotBihomogeneousError::NotBihomogeneousError(std::vector<std::string> offending)
    : Error(ErrorKind::NotBihomogeneous, format_offending(offending)),
      offending_(std::move(offending)) {}

}  // namespace idealkit
