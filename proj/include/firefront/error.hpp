#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace firefront {

enum class ErrorKind {
  OutOfDomain,
  Parse,
  Eval,
  FieldRange,
  ZeroVector,
  NotApplicable,
  SingularTensor,
  NoRoot,
  AmbiguousRoot,
  NonConvexMetric,
  DegenerateCurve,
  EmptyFront,
  TimeDependentMetric,
  Config,
  Numerical,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the engine.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Expression syntax error; position is a byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse,
              message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace firefront
