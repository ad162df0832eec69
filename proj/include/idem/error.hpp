#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idem {

/// Every failure the library reports. The CLI maps these onto exit codes.
enum class ErrorKind {
  CarrierMismatch,
  NotIdempotent,
  NotSemifield,
  ZeroDivision,
  StarDiverges,
  NegativeInput,
  ShapeMismatch,
  SemiringMismatch,
  NonStabilizing,
  WeightOutOfCarrier,
  NoPath,
  EmptyDomain,
  EmptySubset,
  NotMaxPlus,
  GridMismatch,
  ParseError,
  InvariantViolation,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace idem
