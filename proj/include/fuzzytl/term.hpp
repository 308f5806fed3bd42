#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fuzzytl {

/// A logic variable. `scope` separates renamed clause copies; parsed source
/// variables live in scope 0.
struct Variable {
  std::string name;
  std::uint32_t scope = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct VariableHash {
  std::size_t operator()(const Variable& v) const noexcept {
    return std::hash<std::string>{}(v.name) ^ (std::size_t{v.scope} * 0x9e3779b97f4a7c15ULL);
  }
};

/// First-order term: variable, atom, number or compound. Cheap to copy;
/// compound arguments are shared.
class Term {
 public:
  enum class Kind { Variable, Atom, Number, Compound };

  static Term variable(std::string name, std::uint32_t scope = 0);
  static Term variable(Variable v);
  static Term atom(std::string name);
  static Term number(double value);
  /// Throws std::invalid_argument when `args` is empty.
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const noexcept { return static_cast<Kind>(node_.index()); }
  bool is_variable() const noexcept { return kind() == Kind::Variable; }

  const Variable& as_variable() const { return std::get<Variable>(node_); }
  /// Atom name or compound functor.
  const std::string& name() const;
  double as_number() const { return std::get<double>(node_); }
  std::span<const Term> args() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct AtomName {
    std::string name;
    friend bool operator==(const AtomName&, const AtomName&) = default;
  };
  struct Compound {
    std::string functor;
    std::vector<Term> args;
  };

  std::variant<Variable, AtomName, double, std::shared_ptr<const Compound>> node_;
};

/// Shortest decimal text that reads back to exactly `value`.
std::string format_number(double value);

/// Source form: Uppercase variables, lowercase atoms, f(a, b).
std::string to_string(const Term& t);
std::string to_string(const Variable& v);

/// Variable bindings with an undo trail for backtracking.
class Substitution {
 public:
  const Term* lookup(const Variable& v) const;

  /// Follows variable bindings until an unbound variable or a non-variable.
  Term walk(const Term& t) const;
  /// Applies the substitution all the way down.
  Term resolve(const Term& t) const;

  void bind(const Variable& v, Term value);

  std::size_t mark() const noexcept { return trail_.size(); }
  void undo(std::size_t mark);

  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }

 private:
  std::unordered_map<Variable, Term, VariableHash> bindings_;
  std::vector<Variable> trail_;
};

bool occurs_in(const Variable& v, const Term& t, const Substitution& s);
bool is_ground(const Term& t, const Substitution& s);

/// Unifies in place with occurs check. On failure `s` is left as it was.
bool unify(const Term& a, const Term& b, Substitution& s);

/// Most general unifier extending `s`, or nullopt.
std::optional<Substitution> unify_terms(const Term& a, const Term& b, Substitution s);

}  // namespace fuzzytl
