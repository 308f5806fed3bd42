#include "fuzzytl/program.hpp"

#include <algorithm>

#include "fuzzytl/error.hpp"

namespace fuzzytl {

Term TemporalAtom::as_term() const {
  if (args.empty()) return Term::atom(predicate);
  return Term::compound(predicate, args);
}

EventExpr EventExpr::predicate(TemporalAtom pattern) {
  EventExpr e;
  e.kind_ = Kind::Predicate;
  e.pattern_ = std::make_shared<const TemporalAtom>(std::move(pattern));
  return e;
}

EventExpr EventExpr::unite(EventExpr left, EventExpr right) {
  EventExpr e;
  e.kind_ = Kind::Union;
  e.left_ = std::make_shared<const EventExpr>(std::move(left));
  e.right_ = std::make_shared<const EventExpr>(std::move(right));
  return e;
}

EventExpr EventExpr::intersect(EventExpr left, EventExpr right) {
  EventExpr e = unite(std::move(left), std::move(right));
  e.kind_ = Kind::Intersection;
  return e;
}

EventExpr EventExpr::complement(EventExpr operand) {
  EventExpr e;
  e.kind_ = Kind::Complement;
  e.left_ = std::make_shared<const EventExpr>(std::move(operand));
  return e;
}

bool operator==(const EventExpr& a, const EventExpr& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case EventExpr::Kind::Predicate: return a.pattern() == b.pattern();
    case EventExpr::Kind::Complement: return a.operand() == b.operand();
    case EventExpr::Kind::Union:
    case EventExpr::Kind::Intersection: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

KnowledgeBase::KnowledgeBase() : KnowledgeBase(Timeline::build({})) {}

KnowledgeBase::KnowledgeBase(TimelinePtr timeline)
    : timeline_(timeline ? std::move(timeline) : Timeline::build({})) {}

namespace {

void check_annotation(const Timeline& kb_timeline, const TemporalAtom& atom) {
  if (atom.annotation && !atom.annotation->timeline()->compatible_with(kb_timeline)) {
    throw Error(ErrorKind::TimelineMismatch,
                "annotation of " + atom.predicate + " is not over the knowledge base timeline");
  }
}

}  // namespace

void KnowledgeBase::add(Clause clause) {
  check_annotation(*timeline_, clause.head);
  for (const auto& goal : clause.body) {
    if (const auto* call = std::get_if<TemporalAtom>(&goal)) check_annotation(*timeline_, *call);
  }
  index_[{clause.head.predicate, clause.head.arity()}].push_back(clauses_.size());
  clauses_.push_back(std::move(clause));
}

std::span<const std::size_t> KnowledgeBase::candidates(const std::string& name, std::size_t arity) const {
  auto it = index_.find({name, arity});
  if (it == index_.end()) return {};
  return it->second;
}

KnowledgeBase assert_clause(const KnowledgeBase& kb, Clause clause) {
  KnowledgeBase next = kb;
  next.add(std::move(clause));
  return next;
}

std::string to_string(const Event& annotation) {
  std::string out = "@ {";
  bool first = true;
  for (const auto& [id, value] : annotation.memberships()) {
    out += first ? "" : ", ";
    out += id + ": " + format_number(value);
    first = false;
  }
  return out + "}";
}

std::string to_string(const TemporalAtom& atom) {
  std::string out = to_string(atom.as_term());
  if (atom.annotation) out += " " + to_string(*atom.annotation);
  return out;
}

std::string to_string(const EventExpr& expr) {
  switch (expr.kind()) {
    case EventExpr::Kind::Predicate: return to_string(expr.pattern());
    case EventExpr::Kind::Union:
      return "union(" + to_string(expr.left()) + ", " + to_string(expr.right()) + ")";
    case EventExpr::Kind::Intersection:
      return "intersect(" + to_string(expr.left()) + ", " + to_string(expr.right()) + ")";
    case EventExpr::Kind::Complement: return "complement(" + to_string(expr.operand()) + ")";
  }
  return {};
}

std::string to_string(const Goal& goal) {
  if (const auto* call = std::get_if<TemporalAtom>(&goal)) return to_string(*call);
  const auto& c = std::get<TemporalConstraint>(goal);
  return std::string(relation_name(c.relation)) + "(" + to_string(c.left) + ", " + to_string(c.right) +
         ", " + to_string(c.out) + ")";
}

std::string to_string(const Clause& clause) {
  std::string out = to_string(clause.head);
  for (std::size_t n = 0; n < clause.body.size(); ++n) {
    out += n == 0 ? " :- " : ", ";
    out += to_string(clause.body[n]);
  }
  return out + ".";
}

namespace {

void collect(const Term& t, std::vector<Variable>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.as_variable()) == out.end()) out.push_back(t.as_variable());
    return;
  }
  for (const auto& arg : t.args()) collect(arg, out);
}

void collect(const EventExpr& e, std::vector<Variable>& out) {
  if (e.kind() == EventExpr::Kind::Predicate) {
    for (const auto& arg : e.pattern().args) collect(arg, out);
    return;
  }
  collect(e.left(), out);
  if (e.kind() != EventExpr::Kind::Complement) collect(e.right(), out);
}

}  // namespace

std::vector<Variable> variables_of(std::span<const Goal> goals) {
  std::vector<Variable> out;
  for (const auto& goal : goals) {
    if (const auto* call = std::get_if<TemporalAtom>(&goal)) {
      for (const auto& arg : call->args) collect(arg, out);
    } else {
      const auto& c = std::get<TemporalConstraint>(goal);
      collect(c.left, out);
      collect(c.right, out);
      collect(Term::variable(c.out), out);
    }
  }
  return out;
}

}  // namespace fuzzytl
