#include "fuzzytl/term.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace fuzzytl {

Term Term::variable(std::string name, std::uint32_t scope) {
  return variable(Variable{std::move(name), scope});
}

Term Term::variable(Variable v) {
  Term t;
  t.node_ = std::move(v);
  return t;
}

Term Term::atom(std::string name) {
  Term t;
  t.node_ = AtomName{std::move(name)};
  return t;
}

Term Term::number(double value) {
  Term t;
  t.node_ = value;
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("compound term " + functor + " needs at least one argument");
  Term t;
  t.node_ = std::make_shared<const Compound>(Compound{std::move(functor), std::move(args)});
  return t;
}

const std::string& Term::name() const {
  if (const auto* atom = std::get_if<AtomName>(&node_)) return atom->name;
  return std::get<std::shared_ptr<const Compound>>(node_)->functor;
}

std::span<const Term> Term::args() const {
  if (const auto* c = std::get_if<std::shared_ptr<const Compound>>(&node_)) return (*c)->args;
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_.index() != b.node_.index()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: return a.as_variable() == b.as_variable();
    case Term::Kind::Atom: return a.name() == b.name();
    // Bitwise-style equality; -0.0 and 0.0 compare equal, NaN never occurs.
    case Term::Kind::Number: return a.as_number() == b.as_number();
    case Term::Kind::Compound: {
      if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
      for (std::size_t n = 0; n < a.args().size(); ++n) {
        if (!(a.args()[n] == b.args()[n])) return false;
      }
      return true;
    }
  }
  return false;
}

std::string format_number(double value) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string to_string(const Variable& v) {
  if (v.scope == 0) return v.name;
  return "_G" + std::to_string(v.scope) + "_" + v.name;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: return to_string(t.as_variable());
    case Term::Kind::Atom: return t.name();
    case Term::Kind::Number: return format_number(t.as_number());
    case Term::Kind::Compound: {
      std::string out = t.name() + "(";
      for (std::size_t n = 0; n < t.args().size(); ++n) {
        if (n > 0) out += ", ";
        out += to_string(t.args()[n]);
      }
      return out + ")";
    }
  }
  return {};
}

const Term* Substitution::lookup(const Variable& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::walk(const Term& t) const {
  Term current = t;
  while (current.is_variable()) {
    const Term* bound = lookup(current.as_variable());
    if (bound == nullptr) break;
    current = *bound;
  }
  return current;
}

Term Substitution::resolve(const Term& t) const {
  Term w = walk(t);
  if (w.kind() != Term::Kind::Compound) return w;
  std::vector<Term> args;
  args.reserve(w.args().size());
  for (const auto& arg : w.args()) args.push_back(resolve(arg));
  return Term::compound(w.name(), std::move(args));
}

void Substitution::bind(const Variable& v, Term value) {
  bindings_.insert_or_assign(v, std::move(value));
  trail_.push_back(v);
}

void Substitution::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    bindings_.erase(trail_.back());
    trail_.pop_back();
  }
}

bool occurs_in(const Variable& v, const Term& t, const Substitution& s) {
  Term w = s.walk(t);
  if (w.is_variable()) return w.as_variable() == v;
  for (const auto& arg : w.args()) {
    if (occurs_in(v, arg, s)) return true;
  }
  return false;
}

bool is_ground(const Term& t, const Substitution& s) {
  Term w = s.walk(t);
  if (w.is_variable()) return false;
  for (const auto& arg : w.args()) {
    if (!is_ground(arg, s)) return false;
  }
  return true;
}

namespace {

bool unify_walked(const Term& a, const Term& b, Substitution& s) {
  Term x = s.walk(a);
  Term y = s.walk(b);
  if (x.is_variable() && y.is_variable() && x.as_variable() == y.as_variable()) return true;
  if (x.is_variable()) {
    if (occurs_in(x.as_variable(), y, s)) return false;
    s.bind(x.as_variable(), y);
    return true;
  }
  if (y.is_variable()) return unify_walked(y, x, s);
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::Atom: return x.name() == y.name();
    case Term::Kind::Number: return x.as_number() == y.as_number();
    case Term::Kind::Compound: {
      if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
      for (std::size_t n = 0; n < x.args().size(); ++n) {
        if (!unify_walked(x.args()[n], y.args()[n], s)) return false;
      }
      return true;
    }
    case Term::Kind::Variable: break;
  }
  return false;
}

}  // namespace

bool unify(const Term& a, const Term& b, Substitution& s) {
  const std::size_t mark = s.mark();
  if (unify_walked(a, b, s)) return true;
  s.undo(mark);
  return false;
}

std::optional<Substitution> unify_terms(const Term& a, const Term& b, Substitution s) {
  if (!unify(a, b, s)) return std::nullopt;
  return s;
}

}  // namespace fuzzytl
