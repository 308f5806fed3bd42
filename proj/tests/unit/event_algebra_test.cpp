#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fuzzytl/algebra.hpp"
#include "fuzzytl/error.hpp"
#include "fuzzytl/event.hpp"
#include "support/example1.hpp"
#include "support/generators.hpp"
#include "support/naive_algebra.hpp"

namespace fuzzytl {
namespace {

using testing::Example1;

template <typename F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::EmptyInterval;
}

TEST(Event, ConstructionAndQueries) {
  Example1 ex;
  EXPECT_EQ(ex.e1.possibility("i1").value(), 0.8);
  EXPECT_EQ(ex.e1.possibility("i3").value(), 0.0);
  EXPECT_EQ(ex.e1.support(), (std::vector<std::string>{"i1", "i2"}));
  EXPECT_EQ(ex.e4.support_size(), 3u);
  EXPECT_TRUE(Event(ex.timeline).has_empty_support());
  EXPECT_EQ(Event::universal(ex.timeline).support_size(), 3u);
}

TEST(Event, RejectsBadMemberships) {
  Example1 ex;
  EXPECT_EQ(error_of([&] { Event(ex.timeline, {{"i1", 1.5}}); }), ErrorKind::DegreeOutOfRange);
  EXPECT_EQ(error_of([&] { Event(ex.timeline, {{"i1", -0.1}}); }), ErrorKind::DegreeOutOfRange);
  EXPECT_EQ(error_of([&] { Event(ex.timeline, {{"i9", 0.5}}); }), ErrorKind::UnknownInterval);
  EXPECT_EQ(error_of([&] { Event(ex.timeline, {{"i1", 0.5}, {"i1", 0.6}}); }), ErrorKind::DuplicateMembership);
  EXPECT_EQ(error_of([&] { ex.e1.possibility("zz"); }), ErrorKind::UnknownInterval);
}

TEST(Event, WeightedDuration) {
  Example1 ex;
  const std::vector<std::string> all = {"i1", "i2", "i3"};
  const std::vector<std::string> first = {"i1"};
  const std::vector<std::string> none;
  EXPECT_DOUBLE_EQ(weighted_duration(ex.e4, all), 18.0);
  EXPECT_DOUBLE_EQ(weighted_duration(ex.e4, first), 5.0);
  EXPECT_EQ(weighted_duration(ex.e4, none), 0.0);
  const std::vector<std::string> outside = {"i3"};
  EXPECT_EQ(error_of([&] { weighted_duration(ex.e1, outside); }), ErrorKind::SubsetNotInSupport);
}

TEST(Algebra, GoldenRelations) {
  Example1 ex;
  EXPECT_EQ(before(ex.e4, ex.e2).value(), 0.5);
  EXPECT_EQ(before(ex.e4, ex.e1).value(), 0.2);
  EXPECT_EQ(after(ex.e2, ex.e4).value(), 0.5);
  EXPECT_EQ(after(ex.e1, ex.e4).value(), 0.2);
  EXPECT_EQ(overlaps(ex.e4, unite(ex.e1, ex.e3)).value(), 0.5);
  EXPECT_EQ(overlaps(ex.e4, complement(unite(ex.e1, unite(ex.e2, ex.e3)))).value(), 0.4);
  EXPECT_EQ(meets(ex.e1, ex.e3).value(), 0.2);
  EXPECT_EQ(meets(ex.e4, ex.e4).value(), 0.5);
}

TEST(Algebra, GoldenCombinators) {
  Example1 ex;
  EXPECT_EQ(complement(unite(ex.e1, unite(ex.e2, ex.e3))), Event(ex.timeline, {{"i1", 0.2}, {"i2", 0.4}, {"i3", 0.2}}));
  EXPECT_EQ(intersect(ex.e1, ex.e2), Event(ex.timeline, {{"i1", 0.2}, {"i2", 0.2}}));
  EXPECT_EQ(unite(ex.e1, ex.e3), Event(ex.timeline, {{"i1", 0.8}, {"i2", 0.2}, {"i3", 0.8}}));
}

TEST(Algebra, EmptySupportGivesZero) {
  Example1 ex;
  const Event empty(ex.timeline);
  EXPECT_EQ(before(empty, ex.e4), Degree::zero());
  EXPECT_EQ(overlaps(ex.e4, empty), Degree::zero());
  EXPECT_EQ(meets(empty, empty), Degree::zero());
  EXPECT_EQ(during(empty, ex.e1), Degree::one());
  EXPECT_EQ(same_time(empty, empty), Degree::one());
}

TEST(Algebra, CrispRelations) {
  Example1 ex;
  EXPECT_EQ(same_time(ex.e4, ex.e4), Degree::one());
  EXPECT_EQ(same_time(ex.e4, ex.e2), Degree::zero());
  EXPECT_EQ(during(intersect(ex.e1, ex.e2), ex.e1), Degree::one());
  EXPECT_EQ(during(ex.e1, ex.e2), Degree::zero());
}

TEST(Algebra, IntersectionOfDisjointSupportsIsUndefined) {
  Example1 ex;
  const Event a(ex.timeline, {{"i1", 1.0}});
  const Event b(ex.timeline, {{"i3", 1.0}});
  EXPECT_EQ(error_of([&] { intersect(a, b); }), ErrorKind::UndefinedIntersection);
}

TEST(Algebra, TimelineMismatch) {
  Example1 ex;
  auto other = Timeline::build({{"i1", 0, 11}, {"i2", 11, 25}, {"i3", 25, 30}});
  const Event foreign(other, {{"i1", 0.5}});
  EXPECT_EQ(error_of([&] { before(ex.e1, foreign); }), ErrorKind::TimelineMismatch);
  EXPECT_EQ(error_of([&] { unite(ex.e1, foreign); }), ErrorKind::TimelineMismatch);
}

TEST(Algebra, RelationNames) {
  for (Relation r : kAllRelations) EXPECT_EQ(relation_from_name(relation_name(r)), r);
  EXPECT_FALSE(relation_from_name("nope").has_value());
}

// Arbitrary doubles, so these check the laws beyond the tenths grid.
class AlgebraLaws : public ::testing::Test {
 protected:
  testing::Rng rng{20261019};

  template <typename F>
  void repeat(F&& check) {
    for (int n = 0; n < 300; ++n) {
      auto tl = testing::to_timeline(testing::random_naive_timeline(rng));
      check(tl);
    }
  }
};

TEST_F(AlgebraLaws, LatticeLaws) {
  repeat([&](const TimelinePtr& tl) {
    const Event a = testing::random_fuzzy_event(rng, tl);
    const Event b = testing::random_fuzzy_event(rng, tl);
    const Event c = testing::random_fuzzy_event(rng, tl);
    EXPECT_EQ(unite(a, b), unite(b, a));
    EXPECT_EQ(unite(unite(a, b), c), unite(a, unite(b, c)));
    EXPECT_EQ(unite(a, a), a);
    EXPECT_EQ(complement(complement(a)), a);
    const Event lhs = complement(unite(a, b));
    const Event ca = complement(a);
    const Event cb = complement(b);
    for (std::size_t i = 0; i < tl->size(); ++i) EXPECT_EQ(lhs.dense()[i], std::min(ca.dense()[i], cb.dense()[i]));
    if (!lhs.has_empty_support()) EXPECT_EQ(lhs, intersect(ca, cb));
  });
}

TEST_F(AlgebraLaws, RelationSymmetries) {
  repeat([&](const TimelinePtr& tl) {
    const Event a = testing::random_fuzzy_event(rng, tl);
    const Event b = testing::random_fuzzy_event(rng, tl);
    const Event c = testing::random_fuzzy_event(rng, tl);
    EXPECT_EQ(after(a, b), before(b, a));
    EXPECT_EQ(overlaps(a, b), overlaps(b, a));
    for (Relation r : kAllRelations) {
      if (r == Relation::SameTime || r == Relation::During) continue;
      EXPECT_EQ(relate(r, a, unite(b, c)), std::max(relate(r, a, b), relate(r, a, c)));
    }
    EXPECT_EQ(during(a, a), Degree::one());
  });
}

}  // namespace
}  // namespace fuzzytl
