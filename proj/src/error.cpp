#include "fuzzytl/error.hpp"

namespace fuzzytl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateIntervalId: return "duplicate interval id";
    case ErrorKind::EmptyInterval: return "empty interval";
    case ErrorKind::OverlappingIntervals: return "overlapping intervals";
    case ErrorKind::NonFiniteTime: return "non-finite time point";
    case ErrorKind::UnknownInterval: return "unknown interval";
    case ErrorKind::DegreeOutOfRange: return "degree out of range";
    case ErrorKind::DuplicateMembership: return "duplicate membership";
    case ErrorKind::TimelineMismatch: return "timeline mismatch";
    case ErrorKind::UndefinedIntersection: return "undefined intersection";
    case ErrorKind::SubsetNotInSupport: return "subset not in support";
    case ErrorKind::EmptyGoalSupport: return "empty goal support";
    case ErrorKind::UnboundEventExpr: return "unbound event expression";
    case ErrorKind::NoSuchFact: return "no such fact";
    case ErrorKind::DepthLimitExceeded: return "depth limit exceeded";
  }
  return "error";
}

}  // namespace fuzzytl
