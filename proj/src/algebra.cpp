#include "fuzzytl/algebra.hpp"

#include <vector>

#include "fuzzytl/error.hpp"
#include "fuzzytl/kernels.hpp"

namespace fuzzytl {

namespace {

void require_shared_timeline(const Event& e1, const Event& e2) {
  if (!e1.timeline()->compatible_with(*e2.timeline())) {
    throw Error(ErrorKind::TimelineMismatch, "events are defined over different timelines");
  }
}

bool use_parallel(const Event& e) {
  return e.dense().size() >= kernels::kParallelThreshold;
}

Degree crisp(bool holds) { return holds ? Degree::one() : Degree::zero(); }

}  // namespace

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::Before: return "before";
    case Relation::After: return "after";
    case Relation::Overlaps: return "overlaps";
    case Relation::Meets: return "meets";
    case Relation::SameTime: return "same_time";
    case Relation::During: return "during";
  }
  return "?";
}

std::optional<Relation> relation_from_name(std::string_view name) noexcept {
  for (Relation r : kAllRelations) {
    if (relation_name(r) == name) return r;
  }
  return std::nullopt;
}

Degree before(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  return Degree(use_parallel(e1) ? kernels::omp::before(e1.dense(), e2.dense())
                                 : kernels::serial::before(e1.dense(), e2.dense()));
}

Degree after(const Event& e1, const Event& e2) { return before(e2, e1); }

Degree overlaps(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  return Degree(use_parallel(e1) ? kernels::omp::overlap(e1.dense(), e2.dense())
                                 : kernels::serial::overlap(e1.dense(), e2.dense()));
}

Degree meets(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  return Degree(use_parallel(e1) ? kernels::omp::meets(e1.dense(), e2.dense())
                                 : kernels::serial::meets(e1.dense(), e2.dense()));
}

Degree same_time(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  return crisp(use_parallel(e1)
                   ? kernels::omp::same_time(e1.dense(), e2.dense(), kSameTimeTolerance)
                   : kernels::serial::same_time(e1.dense(), e2.dense(), kSameTimeTolerance));
}

Degree during(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  return crisp(use_parallel(e1) ? kernels::omp::during(e1.dense(), e2.dense())
                                : kernels::serial::during(e1.dense(), e2.dense()));
}

Degree relate(Relation r, const Event& e1, const Event& e2) {
  switch (r) {
    case Relation::Before: return before(e1, e2);
    case Relation::After: return after(e1, e2);
    case Relation::Overlaps: return overlaps(e1, e2);
    case Relation::Meets: return meets(e1, e2);
    case Relation::SameTime: return same_time(e1, e2);
    case Relation::During: return during(e1, e2);
  }
  return Degree::zero();
}

Event complement(const Event& e) {
  std::vector<double> out(e.dense().size());
  if (use_parallel(e)) {
    kernels::omp::complement(e.dense(), out);
  } else {
    kernels::serial::complement(e.dense(), out);
  }
  return Event::from_dense(e.timeline(), std::move(out));
}

Event intersect(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  const bool parallel = use_parallel(e1);
  const bool defined = parallel ? kernels::omp::supports_intersect(e1.dense(), e2.dense())
                                : kernels::serial::supports_intersect(e1.dense(), e2.dense());
  if (!defined) throw Error(ErrorKind::UndefinedIntersection, "supports are disjoint");
  std::vector<double> out(e1.dense().size());
  if (parallel) {
    kernels::omp::intersect(e1.dense(), e2.dense(), out);
  } else {
    kernels::serial::intersect(e1.dense(), e2.dense(), out);
  }
  return Event::from_dense(e1.timeline(), std::move(out));
}

Event unite(const Event& e1, const Event& e2) {
  require_shared_timeline(e1, e2);
  std::vector<double> out(e1.dense().size());
  if (use_parallel(e1)) {
    kernels::omp::unite(e1.dense(), e2.dense(), out);
  } else {
    kernels::serial::unite(e1.dense(), e2.dense(), out);
  }
  return Event::from_dense(e1.timeline(), std::move(out));
}

}  // namespace fuzzytl
