#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbikit {

enum class ErrorCode {
  // portrait
  InvalidDegree,
  InvalidLocalDegree,
  DuplicatePoint,
  DanglingImage,
  NotForwardClosed,
  RiemannHurwitzViolation,
  FiberOverflow,
  UnknownPoint,
  // orbifold
  InternalInconsistency,
  NotNonHyperbolic,
  // covergraph
  ParseError,
  RankMismatch,
  UnknownCase,
  NotFullCover,
  IllegalAssignment,
  // toruslift
  NotTorusCase,
  DegreeMismatch,
  AssertionFailure,
  DegenerateIterate,
  Overflow,
  // quotient_sim
  SingularMatrix,
  AllSingular,
  EnumerationCapExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<int> iterate = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        iterate_(iterate) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending iterate for DegenerateIterate.
  std::optional<int> iterate() const noexcept { return iterate_; }

 private:
  ErrorCode code_;
  std::optional<int> iterate_;
};

}  // namespace orbikit
