#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzytl/program.hpp"
#include "fuzzytl/solver.hpp"
#include "fuzzytl/timeline.hpp"

// Surface syntax of .tl files:
//
//   timeline i1 [0, 10), i2 [10, 25), i3 [25, 30).
//   losing_key(john) @ {i1: 0.5, i2: 0.7, i3: 0.5}.
//   lost(X) :- losing_key(X) @ {i2: 1}, before(losing_key(X), buying(X), T).
//   ?- overlaps(losing_key(john), union(away(john), back(john)), T).
//
// Variables start with an uppercase letter or '_', atoms with a lowercase
// letter. '%' starts a comment that runs to the end of the line.
namespace fuzzytl {

struct Diagnostic {
  enum class Severity { Error, Warning };

  Severity severity = Severity::Error;
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::string to_string(const Diagnostic& d);

struct TimelineDecl {
  std::vector<Interval> intervals;
  friend bool operator==(const TimelineDecl&, const TimelineDecl&) = default;
};

struct FactStmt {
  Clause clause;
  friend bool operator==(const FactStmt&, const FactStmt&) = default;
};

struct RuleStmt {
  Clause clause;
  friend bool operator==(const RuleStmt&, const RuleStmt&) = default;
};

struct QueryStmt {
  std::vector<Goal> goals;
  std::size_t line = 0;  // not part of equality

  friend bool operator==(const QueryStmt& a, const QueryStmt& b) { return a.goals == b.goals; }
};

using Statement = std::variant<TimelineDecl, FactStmt, RuleStmt, QueryStmt>;

struct SourceProgram {
  /// The declared timeline, or the context timeline when none is declared;
  /// null when neither exists.
  TimelinePtr timeline;
  std::vector<Statement> statements;

  friend bool operator==(const SourceProgram& a, const SourceProgram& b);
};

struct ParseResult {
  SourceProgram program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
};

/// Parses a whole program. `context` supplies the timeline for annotations
/// when the text itself declares none (the REPL passes its current one);
/// a timeline declaration is then a diagnostic.
ParseResult parse_program(std::string_view text, TimelinePtr context = nullptr);

struct QueryParseResult {
  std::vector<Goal> goals;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
};

/// Parses a single query; the leading "?-" and the final "." are optional.
QueryParseResult parse_query(std::string_view text, TimelinePtr context);

std::string print_statement(const Statement& statement);
/// One statement per line; parse_program(print_program(p)) reproduces p.
std::string print_program(const SourceProgram& program);

enum class AnswerFormat { Text, Machine };

/// Text: "X = john, T = 0.5  (tau = 0.5)" or "true (tau = 1)".
/// Machine: {"bindings":{"T":0.5},"tau":0.5}
std::string format_answer(const Answer& answer, AnswerFormat format);

/// Text: "false."; machine: empty (no records).
std::string format_no_answers(AnswerFormat format);

/// "S = {i1, i3}, D_S = 7.5, D_SA = 18, tau = 0.4166666666666667"
std::string format_match(const TemporalMatch& match);

}  // namespace fuzzytl
