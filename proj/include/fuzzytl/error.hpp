#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzytl {

enum class ErrorKind {
  DuplicateIntervalId,
  EmptyInterval,
  OverlappingIntervals,
  NonFiniteTime,
  UnknownInterval,
  DegreeOutOfRange,
  DuplicateMembership,
  TimelineMismatch,
  UndefinedIntersection,
  SubsetNotInSupport,
  EmptyGoalSupport,
  UnboundEventExpr,
  NoSuchFact,
  DepthLimitExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can report it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fuzzytl
