#include "hermitian/error.hpp"

namespace hermitian {

const char* reason_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::size_guard: return "size_guard";
    case ErrorCode::internal_inconsistency: return "internal_inconsistency";
    case ErrorCode::not_a_chain: return "not_a_chain";
    case ErrorCode::non_uniform_fragment: return "non_uniform_fragment";
    case ErrorCode::verification_failed: return "verification_failed";
  }
  return "unknown";
}

}  // namespace hermitian
