#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nadyn {

enum class ErrorKind {
  LevelCapExceeded,
  NeedsBaseChange,
  BothFormsZero,
  AmbiguousClass,
  OutOfRange,
  SamePoint,
  DegenerateMap,
  IterationCapExceeded,
  IrrationalDirection,
  PiecewiseBoundaryUnresolved,
  BreakpointUnresolved,
  NeedsExtension,
  TotallyInvariantPoint,
  CoefficientPole,
  IllConditioned,
  RootFindingFailed,
  TargetsOverlap,
  SampleCapExceeded,
  SyntaxError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind drives CLI exit codes:
/// SyntaxError and InvalidArgument are usage errors, the rest are domain
/// errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

bool is_usage_error(ErrorKind kind);

}  // namespace nadyn
