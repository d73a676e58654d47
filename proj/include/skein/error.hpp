#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

enum class ErrorKind {
  FractionalExponentSign,
  ZeroFunction,
  LimitDoesNotExist,
  SizeMismatch,
  BoundExceeded,
  NonCoprime,
  IntegralityViolation,
  IndexOutOfRange,
  InexactDivision,
  Parse,
};

std::string_view error_name(ErrorKind kind);

/// Mathematical failure carrying a machine-readable kind. The CLI maps these
/// to exit code 1; parse failures map to usage errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skein
