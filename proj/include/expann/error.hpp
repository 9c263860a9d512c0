#pragma once

#include <stdexcept>
#include <string>

namespace expann {

enum class ErrorKind {
  InvalidFrequency,
  InvalidArgument,
  EmptyWindow,
  OutOfWindow,
  DenominatorZero,
  InvalidCosh,
  InvalidParameter,
  SingularRule,
  TooShort,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace expann
