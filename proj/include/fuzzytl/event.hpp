#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzytl/degree.hpp"
#include "fuzzytl/timeline.hpp"

namespace fuzzytl {

using Membership = std::pair<std::string, double>;

/// An uncertain event: a fuzzy set over the intervals of a timeline.
///
/// Memberships are held densely, one slot per timeline position; a zero
/// slot means the interval is outside the support. Every non-zero value is
/// snapped onto the membership grid (see snap_membership) at construction.
/// Events are immutable.
class Event {
 public:
  /// The event with empty support.
  explicit Event(TimelinePtr timeline);

  /// Throws Error with kind UnknownInterval, DegreeOutOfRange or
  /// DuplicateMembership. Zero memberships are accepted and not stored.
  Event(TimelinePtr timeline, std::span<const Membership> memberships);
  Event(TimelinePtr timeline, std::initializer_list<Membership> memberships)
      : Event(std::move(timeline), std::span<const Membership>(memberships.begin(), memberships.size())) {}

  /// `dense` has one entry per timeline position.
  static Event from_dense(TimelinePtr timeline, std::vector<double> dense);

  /// Membership 1 on every interval.
  static Event universal(TimelinePtr timeline);

  const TimelinePtr& timeline() const noexcept { return timeline_; }
  std::span<const double> dense() const noexcept { return *dense_; }

  /// Throws Error(UnknownInterval) for ids outside the timeline.
  Degree possibility(std::string_view interval_id) const;

  /// Support intervals in timeline order.
  std::vector<std::string> support() const;
  std::size_t support_size() const noexcept;
  bool has_empty_support() const noexcept { return support_size() == 0; }

  /// Non-zero memberships in timeline order.
  std::vector<Membership> memberships() const;

  /// Same timeline (see Timeline::compatible_with) and bit-identical memberships.
  friend bool operator==(const Event& a, const Event& b);

 private:
  Event(TimelinePtr timeline, std::vector<double> dense, int);

  TimelinePtr timeline_;
  std::shared_ptr<const std::vector<double>> dense_;
};

inline Degree possibility(const Event& e, std::string_view interval_id) {
  return e.possibility(interval_id);
}
inline std::vector<std::string> support(const Event& e) { return e.support(); }

/// Sum over `subset` of (end - start) * mu. Throws SubsetNotInSupport when an
/// id is outside the support and UnknownInterval when it is not in the timeline.
double weighted_duration(const Event& e, std::span<const std::string> subset);

}  // namespace fuzzytl
