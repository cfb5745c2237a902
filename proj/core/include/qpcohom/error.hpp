#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

enum class ErrorKind {
  Input,                  // malformed text or undeclared names
  Semantic,               // well-formed but violates a precondition
  InvalidRelation,
  NotTriangular,
  NonFiniteDimensional,
  CapExceeded,
  UnsupportedReduction,
  UnclassifiableTriangle,
  SquareZeroViolated,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  // Resource caps are distinguished from input problems by the CLI.
  bool is_resource() const {
    return kind_ == ErrorKind::NonFiniteDimensional || kind_ == ErrorKind::CapExceeded;
  }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  InputError(int line, const std::string& what)
      : Error(ErrorKind::Input, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qpc
