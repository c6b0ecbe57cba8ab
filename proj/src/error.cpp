#include "nadyn/error.hpp"

namespace nadyn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LevelCapExceeded: return "LevelCapExceeded";
    case ErrorKind::NeedsBaseChange: return "NeedsBaseChange";
    case ErrorKind::BothFormsZero: return "BothFormsZero";
    case ErrorKind::AmbiguousClass: return "AmbiguousClass";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::IrrationalDirection: return "IrrationalDirection";
    case ErrorKind::PiecewiseBoundaryUnresolved: return "PiecewiseBoundaryUnresolved";
    case ErrorKind::BreakpointUnresolved: return "BreakpointUnresolved";
    case ErrorKind::NeedsExtension: return "NeedsExtension";
    case ErrorKind::TotallyInvariantPoint: return "TotallyInvariantPoint";
    case ErrorKind::CoefficientPole: return "CoefficientPole";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::TargetsOverlap: return "TargetsOverlap";
    case ErrorKind::SampleCapExceeded: return "SampleCapExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::InvalidArgument;
}

}  // namespace nadyn
