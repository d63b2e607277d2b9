#include "thetaq/error.hpp"

namespace thetaq {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OutsideV: return "outside_V";
    case ErrorCode::UnsupportedSingularity: return "UnsupportedSingularity";
    case ErrorCode::OutOfTable: return "OutOfTable";
    case ErrorCode::UnrecognizedCase: return "UnrecognizedCase";
    case ErrorCode::InfiniteStabilizer: return "InfiniteStabilizer";
    case ErrorCode::NeedsDecomposition: return "NeedsDecomposition";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::LineThroughThreeSingularPoints: return "LineThroughThreeSingularPoints";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::NearSingularInput: return "NearSingularInput";
    case ErrorCode::LeadingCoefficientCollapse: return "LeadingCoefficientCollapse";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::TrackLost: return "TrackLost";
    case ErrorCode::PathCrossing: return "PathCrossing";
    case ErrorCode::UnassignedTrack: return "UnassignedTrack";
    case ErrorCode::MatchingFailed: return "MatchingFailed";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InconsistentSixthLine: return "InconsistentSixthLine";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::MultiplicitySumMismatch: return "MultiplicitySumMismatch";
    case ErrorCode::PropertyViolationWitness: return "PropertyViolationWitness";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::DegenerateInput:
    case ErrorCode::OutsideV:
    case ErrorCode::UnsupportedSingularity:
    case ErrorCode::OutOfTable:
    case ErrorCode::UnrecognizedCase:
    case ErrorCode::InfiniteStabilizer:
    case ErrorCode::NeedsDecomposition:
    case ErrorCode::InvalidFamily:
    case ErrorCode::LineThroughThreeSingularPoints:
      return ErrorCategory::validation;
    case ErrorCode::MultiplicitySumMismatch:
    case ErrorCode::PropertyViolationWitness:
      return ErrorCategory::contract;
    default:
      return ErrorCategory::numerical;
  }
}

int exit_status(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::validation: return 2;
    case ErrorCategory::numerical: return 3;
    case ErrorCategory::contract: return 4;
  }
  return 3;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace thetaq
