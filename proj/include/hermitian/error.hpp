#pragma once

#include <stdexcept>
#include <string>

namespace hermitian {

/// Machine-readable failure categories. The CLI maps the first two to
/// exit code 2 and everything else to exit code 1.
enum class ErrorCode {
  invalid_argument,
  size_guard,
  internal_inconsistency,
  not_a_chain,
  non_uniform_fragment,
  verification_failed,
};

const char* reason_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* reason() const noexcept { return reason_string(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hermitian
