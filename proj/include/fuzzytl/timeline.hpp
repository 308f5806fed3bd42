#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fuzzytl {

/// A named half-open stretch of time [start, end).
struct Interval {
  std::string id;
  double start = 0.0;
  double end = 0.0;

  double length() const noexcept { return end - start; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class Timeline;
using TimelinePtr = std::shared_ptr<const Timeline>;

/// The global set of pairwise-disjoint intervals, sorted by start time.
///
/// Because the intervals are disjoint and sorted, position order coincides
/// with temporal precedence: for positions j < k, interval j ends no later
/// than interval k begins. The event kernels rely on this.
class Timeline {
 public:
  /// Validates and sorts `specs`. Throws Error with kind DuplicateIntervalId,
  /// EmptyInterval, NonFiniteTime or OverlappingIntervals.
  static TimelinePtr build(std::vector<Interval> specs);

  std::span<const Interval> intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws Error(UnknownInterval).
  std::size_t index_of(std::string_view id) const;
  const Interval& interval(std::string_view id) const { return intervals_[index_of(id)]; }

  /// `a` ends no later than `b` begins, and a != b. Touching endpoints count.
  bool precedes(std::string_view a, std::string_view b) const;
  /// `a` precedes `b` with no declared interval strictly between them.
  bool meets(std::string_view a, std::string_view b) const;

  /// Same object or identical intervals in identical order.
  bool compatible_with(const Timeline& other) const noexcept;

 private:
  explicit Timeline(std::vector<Interval> sorted);

  std::vector<Interval> intervals_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline TimelinePtr build_timeline(std::vector<Interval> specs) {
  return Timeline::build(std::move(specs));
}

}  // namespace fuzzytl
