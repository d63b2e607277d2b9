#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetaq {

enum class ErrorCode {
  // Input outside the supported domain.
  InvalidInput,
  DegenerateInput,
  OutsideV,
  UnsupportedSingularity,
  OutOfTable,
  UnrecognizedCase,
  InfiniteStabilizer,
  NeedsDecomposition,
  InvalidFamily,
  LineThroughThreeSingularPoints,
  // Numerical failures.
  CountMismatch,
  NearSingularInput,
  LeadingCoefficientCollapse,
  DegeneratePencil,
  TrackLost,
  PathCrossing,
  UnassignedTrack,
  MatchingFailed,
  RankDeficient,
  InconsistentSixthLine,
  DegenerateDiscriminant,
  VerificationFailed,
  Ambiguous,
  // Violations of the theta-curve contracts.
  MultiplicitySumMismatch,
  PropertyViolationWitness,
};

enum class ErrorCategory { validation, numerical, contract };

std::string_view error_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

/// Process exit status used by the command line front end: 2 validation,
/// 3 numerical failure, 4 contract violation.
int exit_status(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace thetaq
