#pragma once

#include <stdexcept>
#include <string>

namespace parakov {

// Typed failure modes surfaced to callers (and mapped to CLI exit codes).
enum class ErrorCode {
  parse_error,           // malformed expression / file input
  division_by_zero,      // zero denominator or inverse of zero
  unsupported_feature,   // input outside the supported fragment
  unsupported_denominator,
  unsupported_radicand,
  deep_radical,          // would need a non-square-root radical
  invalid_certificate,   // certificate identity fails on re-check
  internal_error,        // broken internal invariant / self-check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace parakov
