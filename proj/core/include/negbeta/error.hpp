#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negbeta {

enum class ErrorCode {
  kParse,
  kNotBracketed,
  kMultipleRoots,
  kRootNotGreaterThanOne,
  kFieldMismatch,
  kOutOfDomain,
  kNumericAmbiguous,
  kBadAlphabet,
  kUnboundedIndex,
  kExplosionGuard,
  kNoCoverage,
  kConvergenceFailure,
  kNoCertificate,
  kAtomImageMisaligned,
  kNotPrimitive,
  kEigenMismatch,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure of the library surfaces as this exception. Broken
// internal invariants (e.g. an exhausted refinement budget) throw
// std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace negbeta
