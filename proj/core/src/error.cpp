#include "negbeta/error.hpp"

namespace negbeta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotBracketed: return "NotBracketed";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kRootNotGreaterThanOne: return "RootNotGreaterThanOne";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kNumericAmbiguous: return "NumericAmbiguous";
    case ErrorCode::kBadAlphabet: return "BadAlphabet";
    case ErrorCode::kUnboundedIndex: return "UnboundedIndex";
    case ErrorCode::kExplosionGuard: return "ExplosionGuard";
    case ErrorCode::kNoCoverage: return "NoCoverage";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kNoCertificate: return "NoCertificate";
    case ErrorCode::kAtomImageMisaligned: return "AtomImageMisaligned";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kEigenMismatch: return "EigenMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace negbeta
