#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzytl/algebra.hpp"
#include "fuzzytl/event.hpp"
#include "fuzzytl/term.hpp"

namespace fuzzytl {

/// A predicate atom with an optional temporal annotation. Without an
/// annotation the atom is taken to hold at every time.
struct TemporalAtom {
  std::string predicate;
  std::vector<Term> args;
  std::optional<Event> annotation;

  std::size_t arity() const noexcept { return args.size(); }
  /// The atom as a plain term (atom for arity 0, compound otherwise).
  Term as_term() const;

  friend bool operator==(const TemporalAtom&, const TemporalAtom&) = default;
};

/// A compound-event expression whose leaves name predicates.
class EventExpr {
 public:
  enum class Kind { Predicate, Union, Intersection, Complement };

  static EventExpr predicate(TemporalAtom pattern);
  static EventExpr unite(EventExpr left, EventExpr right);
  static EventExpr intersect(EventExpr left, EventExpr right);
  static EventExpr complement(EventExpr operand);

  Kind kind() const noexcept { return kind_; }
  const TemporalAtom& pattern() const { return *pattern_; }
  const EventExpr& left() const { return *left_; }
  const EventExpr& right() const { return *right_; }
  const EventExpr& operand() const { return *left_; }

  friend bool operator==(const EventExpr& a, const EventExpr& b);

 private:
  EventExpr() = default;

  Kind kind_ = Kind::Predicate;
  std::shared_ptr<const TemporalAtom> pattern_;
  std::shared_ptr<const EventExpr> left_;
  std::shared_ptr<const EventExpr> right_;
};

/// relation(left, right, Out): binds Out to the degree of the relation.
struct TemporalConstraint {
  Relation relation = Relation::Before;
  EventExpr left;
  EventExpr right;
  Variable out;

  friend bool operator==(const TemporalConstraint&, const TemporalConstraint&) = default;
};

using Goal = std::variant<TemporalAtom, TemporalConstraint>;

struct Clause {
  TemporalAtom head;
  std::vector<Goal> body;

  bool is_fact() const noexcept { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Annotated facts and rules over one shared timeline. Clause order is the
/// backtracking order.
class KnowledgeBase {
 public:
  /// An empty timeline; only unannotated clauses can be added.
  KnowledgeBase();
  explicit KnowledgeBase(TimelinePtr timeline);

  const TimelinePtr& timeline() const noexcept { return timeline_; }
  std::span<const Clause> clauses() const noexcept { return clauses_; }

  /// Throws Error(TimelineMismatch) if any annotation in `clause` uses
  /// another timeline.
  void add(Clause clause);

  /// Indices of clauses whose head is name/arity, in assertion order.
  std::span<const std::size_t> candidates(const std::string& name, std::size_t arity) const;

 private:
  TimelinePtr timeline_;
  std::vector<Clause> clauses_;
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>> index_;
};

/// Returns `kb` with `clause` appended.
KnowledgeBase assert_clause(const KnowledgeBase& kb, Clause clause);

std::string to_string(const Event& annotation);
std::string to_string(const TemporalAtom& atom);
std::string to_string(const EventExpr& expr);
std::string to_string(const Goal& goal);
std::string to_string(const Clause& clause);

/// Variables of the goals in order of first appearance.
std::vector<Variable> variables_of(std::span<const Goal> goals);

}  // namespace fuzzytl
