#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyjordan {

enum class ErrorKind {
  DivisionByZero,
  ZeroPolynomial,
  ConstantPolynomial,
  DegreeCapExceeded,
  DegreeTooSmall,
  EndpointIsRoot,
  InvalidInterval,
  InvalidArgument,
  RootNearContour,
  NoConvergence,
  Parse,
  ExponentOverflow,
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RootNearContour: return "RootNearContour";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
  }
  return "Unknown";
}

/// Every user-facing failure of the library is an Error carrying a kind.
/// Internal invariant violations are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax errors from the polynomial parser; position is a byte offset.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polyjordan
