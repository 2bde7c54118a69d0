#pragma once

#include <stdexcept>
#include <string>

namespace foliasep {

enum class ErrorCode {
  UnsupportedExtension,
  TruncationExhausted,
  NotYRegular,
  SingularMatrix,
  ShearExhausted,
  NotIsolated,
  BoundTooSmall,
  NotSimple,
  NotSaddleNode,
  NotReal,
  DepthExceeded,
  InsufficientTracePoints,
  GenericityExhausted,
  RadialFoliation,
  InvariantBranch,
  UndecidedReality,
  InconsistentCertificate,
  SyntaxError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Module-qualified code used in reports, e.g. "numeric-core/UnsupportedExtension".
std::string error_qualified_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class SyntaxError : public Error {
public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace foliasep
