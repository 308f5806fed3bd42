#include "fuzzytl/timeline.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "fuzzytl/error.hpp"

namespace fuzzytl {

namespace {

std::string describe(const Interval& i) {
  auto text = [](double v) {
    std::array<char, 32> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), r.ptr);
  };
  return i.id + " [" + text(i.start) + ", " + text(i.end) + ")";
}

}  // namespace

Timeline::Timeline(std::vector<Interval> sorted) : intervals_(std::move(sorted)) {
  index_.reserve(intervals_.size());
  for (std::size_t n = 0; n < intervals_.size(); ++n) index_.emplace(intervals_[n].id, n);
}

TimelinePtr Timeline::build(std::vector<Interval> specs) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& spec : specs) {
    if (!std::isfinite(spec.start) || !std::isfinite(spec.end)) {
      throw Error(ErrorKind::NonFiniteTime, spec.id);
    }
    if (!(spec.start < spec.end)) throw Error(ErrorKind::EmptyInterval, describe(spec));
    if (!seen.emplace(spec.id, 0).second) throw Error(ErrorKind::DuplicateIntervalId, spec.id);
  }
  std::stable_sort(specs.begin(), specs.end(),
                   [](const Interval& a, const Interval& b) { return a.start < b.start; });
  for (std::size_t n = 1; n < specs.size(); ++n) {
    if (specs[n - 1].end > specs[n].start) {
      throw Error(ErrorKind::OverlappingIntervals,
                  describe(specs[n - 1]) + " and " + describe(specs[n]));
    }
  }
  return TimelinePtr(new Timeline(std::move(specs)));
}

std::optional<std::size_t> Timeline::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Timeline::index_of(std::string_view id) const {
  if (auto pos = find(id)) return *pos;
  throw Error(ErrorKind::UnknownInterval, std::string(id));
}

bool Timeline::precedes(std::string_view a, std::string_view b) const {
  const auto& first = interval(a);
  const auto& second = interval(b);
  return first.id != second.id && first.end <= second.start;
}

bool Timeline::meets(std::string_view a, std::string_view b) const {
  return precedes(a, b) && index_of(b) == index_of(a) + 1;
}

bool Timeline::compatible_with(const Timeline& other) const noexcept {
  return this == &other || intervals_ == other.intervals_;
}

}  // namespace fuzzytl
