#include "json.hpp"

#include "fuzzytl/syntax.hpp"

namespace fuzzytl {

std::string print_statement(const Statement& statement) {
  if (const auto* decl = std::get_if<TimelineDecl>(&statement)) {
    std::string out = "timeline ";
    for (std::size_t n = 0; n < decl->intervals.size(); ++n) {
      const auto& i = decl->intervals[n];
      if (n > 0) out += ", ";
      out += i.id + " [" + format_number(i.start) + ", " + format_number(i.end) + ")";
    }
    return out + ".";
  }
  if (const auto* fact = std::get_if<FactStmt>(&statement)) return to_string(fact->clause);
  if (const auto* rule = std::get_if<RuleStmt>(&statement)) return to_string(rule->clause);

  const auto& query = std::get<QueryStmt>(statement);
  std::string out = "?- ";
  for (std::size_t n = 0; n < query.goals.size(); ++n) {
    if (n > 0) out += ", ";
    out += to_string(query.goals[n]);
  }
  return out + ".";
}

std::string print_program(const SourceProgram& program) {
  std::string out;
  for (const auto& statement : program.statements) out += print_statement(statement) + "\n";
  return out;
}

std::string format_answer(const Answer& answer, AnswerFormat format) {
  const std::string tau = format_number(answer.tau.value());
  if (format == AnswerFormat::Text) {
    if (answer.bindings.empty()) return "true (tau = " + tau + ")";
    std::string out;
    for (std::size_t n = 0; n < answer.bindings.size(); ++n) {
      if (n > 0) out += ", ";
      out += answer.bindings[n].first + " = " + to_string(answer.bindings[n].second);
    }
    return out + "  (tau = " + tau + ")";
  }

  // Built by hand so numbers use the same shortest round-trip text as the
  // rest of the output; nlohmann only escapes strings.
  std::string out = "{\"bindings\":{";
  for (std::size_t n = 0; n < answer.bindings.size(); ++n) {
    const auto& [name, value] = answer.bindings[n];
    if (n > 0) out += ",";
    out += nlohmann::json(name).dump() + ":";
    out += value.kind() == Term::Kind::Number ? format_number(value.as_number()) : nlohmann::json(to_string(value)).dump();
  }
  return out + "},\"tau\":" + tau + "}";
}

std::string format_no_answers(AnswerFormat format) {
  return format == AnswerFormat::Text ? "false." : "";
}

std::string format_match(const TemporalMatch& match) {
  std::string out = "S = {";
  for (std::size_t n = 0; n < match.dominated.size(); ++n) {
    if (n > 0) out += ", ";
    out += match.dominated[n];
  }
  return out + "}, D_S = " + format_number(match.covered_duration) + ", D_SA = " +
         format_number(match.total_duration) + ", tau = " + format_number(match.tau.value());
}

}  // namespace fuzzytl
