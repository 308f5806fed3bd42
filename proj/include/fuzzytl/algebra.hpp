#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "fuzzytl/degree.hpp"
#include "fuzzytl/event.hpp"

namespace fuzzytl {

enum class Relation { Before, After, Overlaps, Meets, SameTime, During };

inline constexpr std::array<Relation, 6> kAllRelations = {
    Relation::Before, Relation::After,    Relation::Overlaps,
    Relation::Meets,  Relation::SameTime, Relation::During};

/// Surface names: before, after, overlaps, meets, same_time, during.
std::string_view relation_name(Relation r) noexcept;
std::optional<Relation> relation_from_name(std::string_view name) noexcept;

/// Pointwise tolerance used only by same_time.
inline constexpr double kSameTimeTolerance = 1e-9;

// Graded relations. Each throws Error(TimelineMismatch) when the events live
// on different timelines. An empty max is 0.
Degree before(const Event& e1, const Event& e2);
Degree after(const Event& e1, const Event& e2);
Degree overlaps(const Event& e1, const Event& e2);
Degree meets(const Event& e1, const Event& e2);

// Crisp relations: the result is always 0 or 1.
Degree same_time(const Event& e1, const Event& e2);
Degree during(const Event& e1, const Event& e2);

Degree relate(Relation r, const Event& e1, const Event& e2);

/// 1 - mu over the whole timeline, so unsupported intervals gain membership 1.
Event complement(const Event& e);

/// Pointwise min over the shared support. Throws Error(UndefinedIntersection)
/// when the supports are disjoint.
Event intersect(const Event& e1, const Event& e2);

/// Pointwise max.
Event unite(const Event& e1, const Event& e2);

}  // namespace fuzzytl
