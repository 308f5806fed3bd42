#pragma once

// Random instance generators shared by the property and acceptance tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fuzzytl/event.hpp"
#include "fuzzytl/program.hpp"
#include "fuzzytl/syntax.hpp"
#include "naive_algebra.hpp"

namespace fuzzytl::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Up to `max_intervals` disjoint intervals. Neighbours either touch or
/// leave a gap; ids are shuffled against time order and the declaration
/// order is shuffled too.
inline NaiveTimeline random_naive_timeline(Rng& rng, int min_intervals = 1, int max_intervals = 8) {
  const int n = uniform_int(rng, min_intervals, max_intervals);
  std::vector<std::string> ids;
  for (int k = 0; k < n; ++k) ids.push_back("t" + std::to_string(k));
  std::shuffle(ids.begin(), ids.end(), rng);

  NaiveTimeline tl;
  double cursor = uniform_int(rng, -40, 40) / 2.0;
  for (int k = 0; k < n; ++k) {
    if (coin(rng)) cursor += uniform_int(rng, 1, 12) / 4.0;
    const double length = uniform_int(rng, 1, 40) / 4.0;
    tl.push_back({ids[static_cast<std::size_t>(k)], cursor, cursor + length});
    cursor += length;
  }
  std::shuffle(tl.begin(), tl.end(), rng);
  return tl;
}

/// Memberships from {0, 0.1, ..., 1.0}; `zero_bias` raises the chance of 0.
inline Tenths random_tenths(Rng& rng, const NaiveTimeline& tl, double zero_bias = 0.3) {
  Tenths e;
  for (const auto& i : tl) {
    const int k = coin(rng, zero_bias) ? 0 : uniform_int(rng, 0, 10);
    if (k > 0) e[i.id] = k;
  }
  return e;
}

inline Tenths random_crisp(Rng& rng, const NaiveTimeline& tl) {
  Tenths e;
  for (const auto& i : tl) {
    if (coin(rng)) e[i.id] = 10;
  }
  return e;
}

/// Arbitrary doubles in [0, 1] mixed with tenths, exact 0/1 and tiny values.
inline Event random_fuzzy_event(Rng& rng, const TimelinePtr& timeline) {
  std::vector<double> dense(timeline->size());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& v : dense) {
    switch (uniform_int(rng, 0, 5)) {
      case 0: v = 0.0; break;
      case 1: v = 1.0; break;
      case 2: v = uniform_int(rng, 1, 10) / 10.0; break;
      case 3: v = unit(rng) * 1e-6; break;
      default: v = unit(rng); break;
    }
  }
  return Event::from_dense(timeline, std::move(dense));
}

inline Event random_nonempty_fuzzy_event(Rng& rng, const TimelinePtr& timeline) {
  for (;;) {
    Event e = random_fuzzy_event(rng, timeline);
    if (!e.has_empty_support()) return e;
  }
}

// ---------------------------------------------------------------------------
// Grammar-driven program generator for the round-trip property.

class ProgramGenerator {
 public:
  explicit ProgramGenerator(Rng& rng) : rng_(rng) {}

  SourceProgram program() {
    SourceProgram p;
    const NaiveTimeline naive = random_naive_timeline(rng_, 1, 6);
    TimelineDecl decl;
    for (const auto& i : naive) decl.intervals.push_back({i.id, i.start, i.end});
    p.timeline = Timeline::build(decl.intervals);
    timeline_ = p.timeline;
    p.statements.push_back(decl);

    const int statements = uniform_int(rng_, 0, 8);
    for (int n = 0; n < statements; ++n) {
      switch (uniform_int(rng_, 0, 2)) {
        case 0: p.statements.push_back(FactStmt{Clause{atom(true), {}}}); break;
        case 1: {
          Clause rule{atom(true), {}};
          const int goals = uniform_int(rng_, 1, 3);
          for (int g = 0; g < goals; ++g) rule.body.push_back(goal());
          p.statements.push_back(RuleStmt{std::move(rule)});
          break;
        }
        default: {
          QueryStmt q;
          const int goals = uniform_int(rng_, 1, 3);
          for (int g = 0; g < goals; ++g) q.goals.push_back(goal());
          p.statements.push_back(std::move(q));
          break;
        }
      }
    }
    return p;
  }

 private:
  std::string atom_name() {
    static const std::vector<std::string> names = {"p",     "q",        "lost_key", "market", "e1",
                                                   "before", "timeline", "union",    "x2y",    "during"};
    return names[static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<int>(names.size()) - 1))];
  }

  std::string var_name() {
    static const std::vector<std::string> names = {"X", "Y", "T", "Who", "_1", "_Tmp", "A2"};
    return names[static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<int>(names.size()) - 1))];
  }

  double number() {
    switch (uniform_int(rng_, 0, 4)) {
      case 0: return uniform_int(rng_, -100, 100);
      case 1: return uniform_int(rng_, -1000, 1000) / 8.0;
      case 2: return std::uniform_real_distribution<double>(-1e6, 1e6)(rng_);
      case 3: return std::uniform_real_distribution<double>(0, 1)(rng_) * 1e-200;
      default: return std::uniform_real_distribution<double>(1, 10)(rng_) * 1e200;
    }
  }

  Term term(int depth) {
    switch (uniform_int(rng_, 0, depth > 2 ? 2 : 3)) {
      case 0: return Term::variable(var_name());
      case 1: return Term::atom(atom_name());
      case 2: return Term::number(number());
      default: {
        std::vector<Term> args;
        const int arity = uniform_int(rng_, 1, 3);
        for (int a = 0; a < arity; ++a) args.push_back(term(depth + 1));
        return Term::compound(atom_name(), std::move(args));
      }
    }
  }

  // Relation names with exactly three arguments parse as constraints, so
  // plain atoms avoid that shape.
  TemporalAtom atom(bool annotate) {
    TemporalAtom a;
    do {
      a.predicate = atom_name();
      a.args.clear();
      const int arity = uniform_int(rng_, 0, 3);
      for (int n = 0; n < arity; ++n) a.args.push_back(term(0));
    } while (relation_from_name(a.predicate) && a.arity() == 3);
    if (annotate && coin(rng_)) a.annotation = annotation();
    return a;
  }

  Event annotation() {
    std::vector<Membership> entries;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& i : timeline_->intervals()) {
      if (coin(rng_, 0.4)) continue;
      const double v = coin(rng_) ? uniform_int(rng_, 1, 10) / 10.0 : std::max(unit(rng_), 1e-9);
      entries.emplace_back(i.id, v);
    }
    if (entries.empty()) entries.emplace_back(timeline_->intervals().front().id, 1.0);
    return Event(timeline_, entries);
  }

  EventExpr event_expr(int depth) {
    const int pick = depth > 2 ? 0 : uniform_int(rng_, 0, 3);
    switch (pick) {
      case 1: return EventExpr::unite(event_expr(depth + 1), event_expr(depth + 1));
      case 2: return EventExpr::intersect(event_expr(depth + 1), event_expr(depth + 1));
      case 3: return EventExpr::complement(event_expr(depth + 1));
      default: {
        TemporalAtom leaf;
        do {
          leaf = atom(false);
        } while ((leaf.predicate == "union" && leaf.arity() == 2) || (leaf.predicate == "complement" && leaf.arity() == 1));
        return EventExpr::predicate(std::move(leaf));
      }
    }
  }

  Goal goal() {
    if (coin(rng_, 0.35)) {
      const Relation r = kAllRelations[static_cast<std::size_t>(uniform_int(rng_, 0, 5))];
      return TemporalConstraint{r, event_expr(0), event_expr(0), Variable{var_name(), 0}};
    }
    return atom(true);
  }

  Rng& rng_;
  TimelinePtr timeline_;
};

}  // namespace fuzzytl::testing
