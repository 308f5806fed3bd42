#include "fuzzytl/solver.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "fuzzytl/error.hpp"

namespace fuzzytl {

TemporalMatch match_annotations(const Event& goal, const Event& stored) {
  if (!goal.timeline()->compatible_with(*stored.timeline())) {
    throw Error(ErrorKind::TimelineMismatch, "goal and stored annotations use different timelines");
  }
  const std::vector<std::string> goal_support = goal.support();
  if (goal_support.empty()) throw Error(ErrorKind::EmptyGoalSupport, "goal annotation has empty support");

  TemporalMatch m;
  const auto wanted = goal.dense();
  const auto held = stored.dense();
  for (const auto& id : goal_support) {
    const std::size_t pos = goal.timeline()->index_of(id);
    if (wanted[pos] <= held[pos]) m.dominated.push_back(id);
  }
  m.covered_duration = weighted_duration(goal, m.dominated);
  m.total_duration = weighted_duration(goal, goal_support);
  m.tau = Degree(m.covered_duration / m.total_duration);
  return m;
}

Event resolve_event_expr(const EventExpr& expr, const KnowledgeBase& kb, const Substitution& s) {
  switch (expr.kind()) {
    case EventExpr::Kind::Union:
      return unite(resolve_event_expr(expr.left(), kb, s), resolve_event_expr(expr.right(), kb, s));
    case EventExpr::Kind::Intersection:
      return intersect(resolve_event_expr(expr.left(), kb, s), resolve_event_expr(expr.right(), kb, s));
    case EventExpr::Kind::Complement: return complement(resolve_event_expr(expr.operand(), kb, s));
    case EventExpr::Kind::Predicate: break;
  }

  const TemporalAtom& leaf = expr.pattern();
  const Term pattern = s.resolve(leaf.as_term());
  if (!is_ground(pattern, Substitution{})) throw Error(ErrorKind::UnboundEventExpr, to_string(pattern));

  std::optional<Event> occurrence;
  for (std::size_t index : kb.candidates(leaf.predicate, leaf.arity())) {
    const Clause& clause = kb.clauses()[index];
    if (!clause.is_fact()) continue;
    Substitution local;
    if (!unify(pattern, clause.head.as_term(), local)) continue;
    Event asserted = clause.head.annotation ? *clause.head.annotation : Event::universal(kb.timeline());
    occurrence = occurrence ? unite(*occurrence, asserted) : std::move(asserted);
  }
  if (!occurrence) throw Error(ErrorKind::NoSuchFact, to_string(pattern));
  return *occurrence;
}

Degree eval_meta(Relation relation, const EventExpr& left, const EventExpr& right, const KnowledgeBase& kb,
                 const Substitution& s) {
  return relate(relation, resolve_event_expr(left, kb, s), resolve_event_expr(right, kb, s));
}

namespace {

Term rename(const Term& t, std::uint32_t scope) {
  switch (t.kind()) {
    case Term::Kind::Variable: return Term::variable(t.as_variable().name, scope);
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& arg : t.args()) args.push_back(rename(arg, scope));
      return Term::compound(t.name(), std::move(args));
    }
    default: return t;
  }
}

TemporalAtom rename(const TemporalAtom& atom, std::uint32_t scope) {
  TemporalAtom out{atom.predicate, {}, atom.annotation};
  out.args.reserve(atom.args.size());
  for (const auto& arg : atom.args) out.args.push_back(rename(arg, scope));
  return out;
}

EventExpr rename(const EventExpr& e, std::uint32_t scope) {
  switch (e.kind()) {
    case EventExpr::Kind::Predicate: return EventExpr::predicate(rename(e.pattern(), scope));
    case EventExpr::Kind::Union: return EventExpr::unite(rename(e.left(), scope), rename(e.right(), scope));
    case EventExpr::Kind::Intersection:
      return EventExpr::intersect(rename(e.left(), scope), rename(e.right(), scope));
    case EventExpr::Kind::Complement: return EventExpr::complement(rename(e.operand(), scope));
  }
  return e;
}

Goal rename(const Goal& g, std::uint32_t scope) {
  if (const auto* call = std::get_if<TemporalAtom>(&g)) return rename(*call, scope);
  const auto& c = std::get<TemporalConstraint>(g);
  return TemporalConstraint{c.relation, rename(c.left, scope), rename(c.right, scope), Variable{c.out.name, scope}};
}

TemporalAtom resolved(const TemporalAtom& atom, const Substitution& s) {
  TemporalAtom out{atom.predicate, {}, atom.annotation};
  for (const auto& arg : atom.args) out.args.push_back(s.resolve(arg));
  return out;
}

EventExpr resolved(const EventExpr& e, const Substitution& s) {
  switch (e.kind()) {
    case EventExpr::Kind::Predicate: return EventExpr::predicate(resolved(e.pattern(), s));
    case EventExpr::Kind::Union: return EventExpr::unite(resolved(e.left(), s), resolved(e.right(), s));
    case EventExpr::Kind::Intersection: return EventExpr::intersect(resolved(e.left(), s), resolved(e.right(), s));
    case EventExpr::Kind::Complement: return EventExpr::complement(resolved(e.operand(), s));
  }
  return e;
}

// Renders a goal with the current bindings applied. A constraint whose
// output is bound shows the bound value in place of the variable.
std::string render(const Goal& g, const Substitution& s) {
  if (const auto* call = std::get_if<TemporalAtom>(&g)) return to_string(resolved(*call, s));
  const auto& c = std::get<TemporalConstraint>(g);
  return std::string(relation_name(c.relation)) + "(" + to_string(resolved(c.left, s)) + ", " +
         to_string(resolved(c.right, s)) + ", " + to_string(s.resolve(Term::variable(c.out))) + ")";
}

struct Frame {
  std::shared_ptr<const Goal> goal;
  int parent = -1;
  std::size_t depth = 0;
  std::shared_ptr<const Frame> next;
};
using Continuation = std::shared_ptr<const Frame>;

struct ProofNode {
  ProofStep::Kind kind;
  std::shared_ptr<const Goal> goal;
  int parent;
  double match_degree;
  std::optional<TemporalMatch> match;
};

struct ChoicePoint {
  Continuation goals;
  std::span<const std::size_t> candidates;
  std::size_t next = 0;
  std::size_t trail_mark = 0;
  std::size_t arena_size = 0;
  double tau = 1.0;
};

class Engine {
 public:
  Engine(const KnowledgeBase& kb, const SolveOptions& options, const std::function<bool(const Answer&)>& on_answer)
      : kb_(kb), options_(options), on_answer_(on_answer) {}

  void run(std::span<const Goal> query) {
    query_vars_ = variables_of(query);
    Continuation goals;
    for (auto it = query.rbegin(); it != query.rend(); ++it) {
      goals = std::make_shared<const Frame>(Frame{std::make_shared<const Goal>(*it), -1, 0, goals});
    }
    tau_ = 1.0;

    for (;;) {
      if (!goals) {
        if (!on_answer_(make_answer())) return;
        if (!backtrack(goals)) return;
        continue;
      }
      const Frame& frame = *goals;
      if (const auto* call = std::get_if<TemporalAtom>(frame.goal.get())) {
        if (frame.depth >= options_.depth_limit) {
          throw Error(ErrorKind::DepthLimitExceeded,
                      "more than " + std::to_string(options_.depth_limit) + " nested resolutions at " +
                          render(*frame.goal, subst_));
        }
        choices_.push_back(ChoicePoint{goals, kb_.candidates(call->predicate, call->arity()), 0, subst_.mark(),
                                       arena_.size(), tau_});
        if (resume(goals)) continue;
        choices_.pop_back();
        if (!backtrack(goals)) return;
        continue;
      }
      if (!apply_constraint(frame, goals) && !backtrack(goals)) return;
    }
  }

 private:
  bool apply_constraint(const Frame& frame, Continuation& goals) {
    const auto& c = std::get<TemporalConstraint>(*frame.goal);
    const Degree degree = eval_meta(c.relation, c.left, c.right, kb_, subst_);
    if (options_.trace) {
      TraceEvent ev;
      ev.kind = TraceEvent::Kind::Constraint;
      ev.depth = frame.depth;
      ev.goal = render(*frame.goal, subst_);
      ev.degree = degree;
      options_.trace(ev);
    }
    if (!unify(Term::variable(c.out), Term::number(degree.value()), subst_)) return false;
    arena_.push_back(ProofNode{ProofStep::Kind::Constraint, frame.goal, frame.parent, degree.value(), std::nullopt});
    tau_ = std::min(tau_, degree.value());
    if (tau_ <= options_.tau_min) return false;
    goals = frame.next;
    return true;
  }

  // Tries the remaining clauses of the newest choice point. On success the
  // choice point is dropped if it has no alternatives left.
  bool resume(Continuation& goals) {
    ChoicePoint& cp = choices_.back();
    subst_.undo(cp.trail_mark);
    arena_.resize(cp.arena_size);
    tau_ = cp.tau;

    const Frame& frame = *cp.goals;
    const auto& goal = std::get<TemporalAtom>(*frame.goal);
    const Term goal_term = goal.as_term();
    while (cp.next < cp.candidates.size()) {
      const Clause& clause = kb_.clauses()[cp.candidates[cp.next++]];
      const std::uint32_t scope = ++scope_counter_;
      const TemporalAtom head = rename(clause.head, scope);
      if (!unify(goal_term, head.as_term(), subst_)) continue;

      double match_degree = 1.0;
      std::optional<TemporalMatch> match;
      if (goal.annotation && head.annotation) {
        match = match_annotations(*goal.annotation, *head.annotation);
        match_degree = match->tau.value();
        if (options_.trace) {
          TraceEvent ev;
          ev.kind = TraceEvent::Kind::TemporalUnify;
          ev.depth = frame.depth;
          ev.goal = render(*frame.goal, subst_);
          ev.target = to_string(resolved(head, subst_));
          ev.match = match;
          ev.degree = match->tau;
          options_.trace(ev);
        }
      }
      const double next_tau = std::min(cp.tau, match_degree);
      if (next_tau <= options_.tau_min) {
        subst_.undo(cp.trail_mark);
        continue;
      }

      arena_.push_back(ProofNode{ProofStep::Kind::Call, frame.goal, frame.parent, match_degree, std::move(match)});
      const int self = static_cast<int>(arena_.size()) - 1;
      Continuation rest = frame.next;
      for (auto it = clause.body.rbegin(); it != clause.body.rend(); ++it) {
        rest = std::make_shared<const Frame>(
            Frame{std::make_shared<const Goal>(rename(*it, scope)), self, frame.depth + 1, rest});
      }
      goals = std::move(rest);
      tau_ = next_tau;
      if (cp.next == cp.candidates.size()) choices_.pop_back();
      return true;
    }
    return false;
  }

  bool backtrack(Continuation& goals) {
    while (!choices_.empty()) {
      if (resume(goals)) return true;
      choices_.pop_back();
    }
    return false;
  }

  Answer make_answer() const {
    Answer answer;
    for (const auto& v : query_vars_) {
      if (!v.name.empty() && v.name.front() == '_') continue;
      answer.bindings.emplace_back(v.name, subst_.resolve(Term::variable(v)));
    }
    answer.tau = Degree(tau_);
    if (options_.record_proofs) answer.proof = build_proof();
    return answer;
  }

  std::vector<ProofStep> build_proof() const {
    std::vector<ProofStep> steps(arena_.size());
    for (std::size_t n = 0; n < arena_.size(); ++n) {
      steps[n].kind = arena_[n].kind;
      steps[n].goal = render(*arena_[n].goal, subst_);
      steps[n].match_degree = arena_[n].match_degree;
      steps[n].degree = arena_[n].match_degree;
      steps[n].match = arena_[n].match;
    }
    // Children always follow their parent in the arena, so a reverse sweep
    // folds every subtree before it is attached.
    std::vector<ProofStep> roots;
    for (std::size_t n = arena_.size(); n-- > 0;) {
      const int parent = arena_[n].parent;
      if (parent < 0) continue;
      ProofStep& p = steps[static_cast<std::size_t>(parent)];
      p.degree = std::min(p.degree, steps[n].degree);
      p.children.insert(p.children.begin(), std::move(steps[n]));
    }
    for (std::size_t n = 0; n < arena_.size(); ++n) {
      if (arena_[n].parent < 0) roots.push_back(std::move(steps[n]));
    }
    return roots;
  }

  const KnowledgeBase& kb_;
  const SolveOptions& options_;
  const std::function<bool(const Answer&)>& on_answer_;

  Substitution subst_;
  std::vector<ChoicePoint> choices_;
  std::vector<ProofNode> arena_;
  std::vector<Variable> query_vars_;
  double tau_ = 1.0;
  std::uint32_t scope_counter_ = 0;
};

std::string binding_key(const Answer& a) {
  std::string key;
  for (const auto& [name, value] : a.bindings) key += name + "=" + to_string(value) + ";";
  return key;
}

}  // namespace

void solve(const KnowledgeBase& kb, std::span<const Goal> query, const SolveOptions& options,
           const std::function<bool(const Answer&)>& on_answer) {
  if (!(options.tau_min >= 0.0 && options.tau_min <= 1.0)) {
    throw Error(ErrorKind::DegreeOutOfRange, "tau_min must be in [0, 1]");
  }
  if (!options.best_only) {
    Engine(kb, options, on_answer).run(query);
    return;
  }

  std::vector<Answer> best;
  std::map<std::string, std::size_t> slot;
  const std::function<bool(const Answer&)> collect = [&](const Answer& a) {
    auto [it, fresh] = slot.emplace(binding_key(a), best.size());
    if (fresh) {
      best.push_back(a);
    } else if (a.tau > best[it->second].tau) {
      best[it->second] = a;
    }
    return true;
  };
  Engine(kb, options, collect).run(query);
  for (const auto& a : best) {
    if (!on_answer(a)) return;
  }
}

std::vector<Answer> solve(const KnowledgeBase& kb, std::span<const Goal> query, const SolveOptions& options) {
  std::vector<Answer> answers;
  solve(kb, query, options, [&](const Answer& a) {
    answers.push_back(a);
    return true;
  });
  return answers;
}

}  // namespace fuzzytl
