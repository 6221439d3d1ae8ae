#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tq {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NoSolution,
  DimensionMismatch,
  NonAcyclic,
  NestedThread,
  ElementNotFound,
  TooLarge,
  WindowMismatch,
  ExceedsBound,
  BoundaryContaminated,
  EndNotSplit,
  NotFunctorial,
  AlphaNotInvertible,
  NotRepresentable,
  NotProjectiveCertified,
  ZNotExtOrthogonal,
  ParseError,
  UnknownVertex,
  DuplicateName,
  NestedThreadLabel,
  InvalidArgument,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& msg)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tq
