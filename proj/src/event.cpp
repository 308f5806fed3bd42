#include "fuzzytl/event.hpp"

#include <algorithm>
#include <unordered_set>

#include "fuzzytl/error.hpp"

namespace fuzzytl {

namespace {

const TimelinePtr& require(const TimelinePtr& timeline) {
  static const TimelinePtr empty = Timeline::build({});
  return timeline ? timeline : empty;
}

}  // namespace

Event::Event(TimelinePtr timeline, std::vector<double> dense, int)
    : timeline_(std::move(timeline)), dense_(std::make_shared<const std::vector<double>>(std::move(dense))) {}

Event::Event(TimelinePtr timeline)
    : timeline_(require(timeline)),
      dense_(std::make_shared<const std::vector<double>>(timeline_->size(), 0.0)) {}

Event::Event(TimelinePtr timeline, std::span<const Membership> memberships) : timeline_(require(timeline)) {
  std::vector<double> dense(timeline_->size(), 0.0);
  std::vector<bool> assigned(dense.size(), false);
  for (const auto& [id, value] : memberships) {
    const std::size_t pos = timeline_->index_of(id);
    Degree checked(value);
    if (assigned[pos]) throw Error(ErrorKind::DuplicateMembership, id);
    assigned[pos] = true;
    dense[pos] = snap_membership(checked.value());
  }
  dense_ = std::make_shared<const std::vector<double>>(std::move(dense));
}

Event Event::from_dense(TimelinePtr timeline, std::vector<double> dense) {
  const TimelinePtr& tl = require(timeline);
  if (dense.size() != tl->size()) {
    throw Error(ErrorKind::TimelineMismatch, "dense membership vector has " +
                                                 std::to_string(dense.size()) + " entries, timeline has " +
                                                 std::to_string(tl->size()));
  }
  for (double& value : dense) value = snap_membership(Degree(value).value());
  return Event(tl, std::move(dense), 0);
}

Event Event::universal(TimelinePtr timeline) {
  const TimelinePtr& tl = require(timeline);
  return Event(tl, std::vector<double>(tl->size(), 1.0), 0);
}

Degree Event::possibility(std::string_view interval_id) const {
  return Degree((*dense_)[timeline_->index_of(interval_id)]);
}

std::vector<std::string> Event::support() const {
  std::vector<std::string> ids;
  const auto intervals = timeline_->intervals();
  for (std::size_t n = 0; n < dense_->size(); ++n) {
    if ((*dense_)[n] > 0.0) ids.push_back(intervals[n].id);
  }
  return ids;
}

std::size_t Event::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(dense_->begin(), dense_->end(), [](double v) { return v > 0.0; }));
}

std::vector<Membership> Event::memberships() const {
  std::vector<Membership> out;
  const auto intervals = timeline_->intervals();
  for (std::size_t n = 0; n < dense_->size(); ++n) {
    if ((*dense_)[n] > 0.0) out.emplace_back(intervals[n].id, (*dense_)[n]);
  }
  return out;
}

bool operator==(const Event& a, const Event& b) {
  return a.timeline_->compatible_with(*b.timeline_) && *a.dense_ == *b.dense_;
}

double weighted_duration(const Event& e, std::span<const std::string> subset) {
  const auto intervals = e.timeline()->intervals();
  const auto dense = e.dense();
  std::unordered_set<std::size_t> counted;
  double total = 0.0;
  for (const auto& id : subset) {
    const std::size_t pos = e.timeline()->index_of(id);
    if (dense[pos] <= 0.0) throw Error(ErrorKind::SubsetNotInSupport, id);
    if (!counted.insert(pos).second) continue;
    total += intervals[pos].length() * dense[pos];
  }
  return total;
}

}  // namespace fuzzytl
