#pragma once

#include <stdexcept>
#include <string>

namespace topolab {

enum class ErrorKind {
  NotATopology,
  PointOutOfRange,
  CarrierOverflow,
  BoundExceeded,
  NotContinuous,
  NotDirected,
  NotMonotone,
  RoleViolation,
  NotOpen,
  UnknownTheorem,
  InvalidPreorder,
  InvalidPoset,
  InvalidInput,
  InternalInvariant,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace topolab
