#pragma once

#include <stdexcept>
#include <string>

namespace glsuper {

enum class ErrorCode {
  NegativeRadicand,
  FactorizationBoundExceeded,
  MalformedSignature,
  NotEssentiallyTypical,
  GuardExceeded,
  InvalidCoefficient,
  IndexOutOfRange,
  LengthMismatch,
  NotSimpleRoot,
  InvalidTable,
  ParseError,
};

const char* error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command-line front end can map it to a distinct exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glsuper
