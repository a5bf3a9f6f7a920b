#pragma once

#include <stdexcept>
#include <string>

namespace totcof {

enum class ErrorCode {
  input = 1,
  not_a_poset,
  containment,
  invalid_map,
  parse,
  validation,
  condition_failure,
  limit,
};

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace totcof
