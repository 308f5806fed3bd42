#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzytl/algebra.hpp"
#include "fuzzytl/degree.hpp"
#include "fuzzytl/event.hpp"
#include "fuzzytl/program.hpp"
#include "fuzzytl/term.hpp"

namespace fuzzytl {

/// The pieces of one temporal unification. `dominated` is the part of the
/// goal's support where the goal membership is <= the stored membership.
struct TemporalMatch {
  std::vector<std::string> dominated;
  double covered_duration = 0.0;  // weighted duration of `dominated`
  double total_duration = 0.0;    // weighted duration of the goal support
  Degree tau;
};

/// Matches a goal annotation against a stored annotation:
/// tau = weighted_duration(goal, dominated) / weighted_duration(goal, support).
/// A pointwise-dominated goal gets 1, a goal with nothing dominated gets 0.
/// Throws TimelineMismatch, or EmptyGoalSupport when the goal has no support.
TemporalMatch match_annotations(const Event& goal, const Event& stored);

inline Degree temporal_unify(const Event& goal, const Event& stored) {
  return match_annotations(goal, stored).tau;
}

/// Evaluates an event expression. A leaf names a ground predicate; its event
/// is the union of the annotations of every fact it matches (an unannotated
/// fact contributes the universal event). Throws UnboundEventExpr, NoSuchFact
/// and UndefinedIntersection.
Event resolve_event_expr(const EventExpr& expr, const KnowledgeBase& kb, const Substitution& s);

Degree eval_meta(Relation relation, const EventExpr& left, const EventExpr& right, const KnowledgeBase& kb,
                 const Substitution& s);

/// One goal of a proof. For a call, `match_degree` is the temporal
/// unification degree against the clause head (1 when either side is
/// unannotated) and `children` are the body goals of that clause. For a
/// temporal constraint it is the computed relation degree.
struct ProofStep {
  enum class Kind { Call, Constraint };

  Kind kind = Kind::Call;
  std::string goal;
  double match_degree = 1.0;
  /// min of match_degree and every child's degree.
  double degree = 1.0;
  std::optional<TemporalMatch> match;
  std::vector<ProofStep> children;
};

struct Answer {
  /// Query variables in order of first appearance; names starting with an
  /// underscore are omitted.
  std::vector<std::pair<std::string, Term>> bindings;
  Degree tau;
  /// Filled when SolveOptions::record_proofs is set.
  std::vector<ProofStep> proof;
};

struct TraceEvent {
  enum class Kind { TemporalUnify, Constraint };

  Kind kind = Kind::TemporalUnify;
  std::size_t depth = 0;
  std::string goal;
  /// The clause head (temporal unify) or empty (constraint).
  std::string target;
  std::optional<TemporalMatch> match;
  Degree degree;
};

struct SolveOptions {
  /// Proofs whose degree is <= tau_min are failures. Must be in [0, 1].
  double tau_min = 0.0;
  /// Keep only the highest-degree answer for each distinct binding.
  bool best_only = false;
  /// Maximum nesting of clause resolutions on one branch.
  std::size_t depth_limit = 10000;
  bool record_proofs = false;
  std::function<void(const TraceEvent&)> trace;
};

/// Depth-first, left-to-right resolution with chronological backtracking.
/// Answers are delivered as they are found; returning false from
/// `on_answer` stops the search. Throws DepthLimitExceeded and the
/// evaluation errors of temporal constraints.
void solve(const KnowledgeBase& kb, std::span<const Goal> query, const SolveOptions& options,
           const std::function<bool(const Answer&)>& on_answer);

std::vector<Answer> solve(const KnowledgeBase& kb, std::span<const Goal> query, const SolveOptions& options = {});

}  // namespace fuzzytl
