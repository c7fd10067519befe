#pragma once

#include <stdexcept>
#include <string>

namespace cfgkit {

// Failure categories; the C API and the CLI map these onto status and exit
// codes.
enum class ErrorKind {
  Syntax,        // malformed grammar text
  Validation,    // structurally invalid grammar value
  Precondition,  // operation not applicable (empty language, not in CNF, ...)
  Step,          // invalid derivation step
  Limit,         // explicit resource cap hit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(ErrorKind kind, const std::string& message, int line, int column)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based, 0 when not positional
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace cfgkit
