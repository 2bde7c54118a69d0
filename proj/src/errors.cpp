#include "foliasep/errors.hpp"

namespace foliasep {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::TruncationExhausted: return "TruncationExhausted";
    case ErrorCode::NotYRegular: return "NotYRegular";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ShearExhausted: return "ShearExhausted";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSaddleNode: return "NotSaddleNode";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::InsufficientTracePoints: return "InsufficientTracePoints";
    case ErrorCode::GenericityExhausted: return "GenericityExhausted";
    case ErrorCode::RadialFoliation: return "RadialFoliation";
    case ErrorCode::InvariantBranch: return "InvariantBranch";
    case ErrorCode::UndecidedReality: return "UndecidedReality";
    case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string error_qualified_name(ErrorCode code) {
  const char* module = "numeric-core";
  switch (code) {
    case ErrorCode::UnsupportedExtension:
    case ErrorCode::TruncationExhausted:
    case ErrorCode::NotYRegular:
    case ErrorCode::SingularMatrix:
      module = "numeric-core";
      break;
    case ErrorCode::ShearExhausted:
    case ErrorCode::NotIsolated:
    case ErrorCode::BoundTooSmall:
    case ErrorCode::NotSimple:
      module = "foliation-core";
      break;
    case ErrorCode::DepthExceeded:
      module = "blowup-engine";
      break;
    case ErrorCode::InsufficientTracePoints:
      module = "separatrix-engine";
      break;
    case ErrorCode::GenericityExhausted:
    case ErrorCode::RadialFoliation:
    case ErrorCode::InvariantBranch:
      module = "polar-invariants";
      break;
    case ErrorCode::NotSaddleNode:
    case ErrorCode::NotReal:
    case ErrorCode::UndecidedReality:
    case ErrorCode::InconsistentCertificate:
      module = "real-structure";
      break;
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidArgument:
      module = "cli-report";
      break;
  }
  return std::string(module) + "/" + error_code_name(code);
}

}  // namespace foliasep
