#include "fuzzytl/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzytl/error.hpp"
#include "fuzzytl/solver.hpp"
#include "fuzzytl/syntax.hpp"

namespace fuzzytl::cli {

namespace {

SolveOptions solve_options(const RunOptions& options, std::ostream* trace) {
  SolveOptions so;
  so.tau_min = options.tau_min;
  so.best_only = options.best_only;
  so.depth_limit = options.depth_limit;
  if (options.trace && trace != nullptr) {
    so.trace = [trace](const TraceEvent& ev) {
      *trace << "trace: [depth " << ev.depth << "] " << ev.goal;
      if (ev.kind == TraceEvent::Kind::TemporalUnify) {
        *trace << " ~ " << ev.target << ": " << format_match(*ev.match) << "\n";
      } else {
        *trace << " = " << format_number(ev.degree.value()) << "\n";
      }
    };
  }
  return so;
}

AnswerFormat answer_format(const RunOptions& options) {
  return options.machine_output ? AnswerFormat::Machine : AnswerFormat::Text;
}

void report(std::ostream& err, const std::string& name, const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) err << name << ":" << to_string(d) << "\n";
}

std::string query_text(const std::vector<Goal>& goals) {
  return print_statement(QueryStmt{goals, 0});
}

struct QueryOutcome {
  std::string out;
  std::string err;
  bool failed = false;
};

QueryOutcome run_query(const KnowledgeBase& kb, const QueryStmt& query, const RunOptions& options,
                       const std::string& name) {
  QueryOutcome outcome;
  std::ostringstream out;
  std::ostringstream err;
  const AnswerFormat format = answer_format(options);
  if (format == AnswerFormat::Text) out << query_text(query.goals) << "\n";
  std::size_t count = 0;
  try {
    solve(kb, query.goals, solve_options(options, &err), [&](const Answer& a) {
      out << format_answer(a, format) << "\n";
      ++count;
      return true;
    });
    if (count == 0 && format == AnswerFormat::Text) out << format_no_answers(format) << "\n";
  } catch (const Error& e) {
    err << name << ":" << query.line << ": runtime error: " << e.what() << "\n";
    outcome.failed = true;
  }
  outcome.out = out.str();
  outcome.err = err.str();
  return outcome;
}

}  // namespace

int run_source(const std::string& text, const std::string& name, const RunOptions& options, std::ostream& out,
               std::ostream& err) {
  ParseResult parsed = parse_program(text);
  if (!parsed.ok()) {
    report(err, name, parsed.diagnostics);
    return kDiagnostics;
  }

  KnowledgeBase kb(parsed.program.timeline);
  std::vector<const QueryStmt*> queries;
  for (const auto& statement : parsed.program.statements) {
    if (const auto* fact = std::get_if<FactStmt>(&statement)) kb.add(fact->clause);
    if (const auto* rule = std::get_if<RuleStmt>(&statement)) kb.add(rule->clause);
    if (const auto* query = std::get_if<QueryStmt>(&statement)) queries.push_back(query);
  }

  // Queries only read the knowledge base, so they can run side by side;
  // output is buffered per query and emitted in source order.
  std::vector<QueryOutcome> outcomes(queries.size());
  const auto count = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    outcomes[static_cast<std::size_t>(n)] = run_query(kb, *queries[static_cast<std::size_t>(n)], options, name);
  }

  int status = kSuccess;
  for (const auto& outcome : outcomes) {
    out << outcome.out;
    err << outcome.err;
    if (outcome.failed) status = kRuntimeError;
  }
  out.flush();
  return status;
}

int run_file(const std::string& path, const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << path << ": cannot open file\n";
    return kUsageError;
  }
  std::ostringstream text;
  text << file.rdbuf();
  return run_source(text.str(), path, options, out, err);
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// A statement is complete once its text, without comments, ends in '.'.
bool statement_complete(const std::string& buffer) {
  std::string code;
  std::istringstream lines(buffer);
  for (std::string line; std::getline(lines, line);) code += line.substr(0, line.find('%')) + "\n";
  const std::string t = trim(code);
  return !t.empty() && t.back() == '.';
}

class Session {
 public:
  Session(const RunOptions& options, std::istream& in, std::ostream& out, std::ostream& err, bool show_prompt)
      : options_(options), in_(in), out_(out), err_(err), show_prompt_(show_prompt) {}

  int run() {
    std::string buffer;
    for (;;) {
      if (show_prompt_) out_ << (buffer.empty() ? "fuzzytl> " : "    ...> ") << std::flush;
      std::string line;
      if (!next_line(line)) break;
      if (buffer.empty()) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == ':') {
          if (!directive(t)) return kSuccess;
          continue;
        }
      }
      buffer += line + "\n";
      if (!statement_complete(buffer)) continue;
      process(buffer, "<stdin>");
      buffer.clear();
    }
    if (!trim(buffer).empty()) err_ << "<stdin>: incomplete statement at end of input\n";
    return kSuccess;
  }

 private:
  bool next_line(std::string& line) {
    if (pushed_back_) {
      line = std::move(*pushed_back_);
      pushed_back_.reset();
      return true;
    }
    return static_cast<bool>(std::getline(in_, line));
  }

  // Returns false on :quit.
  bool directive(const std::string& text) {
    std::istringstream words(text);
    std::string command;
    words >> command;
    if (command == ":quit" || command == ":q") return false;
    if (command == ":help") {
      out_ << "Enter facts, rules and ?- queries terminated by '.'.\n"
              "  :load <path>   assert the timeline and clauses of a file\n"
              "  :timeline      show the current timeline\n"
              "  :quit          leave\n";
    } else if (command == ":timeline") {
      if (!timeline_) {
        out_ << "% no timeline declared\n";
      } else {
        TimelineDecl decl;
        decl.intervals.assign(timeline_->intervals().begin(), timeline_->intervals().end());
        out_ << print_statement(decl) << "\n";
      }
    } else if (command == ":load") {
      std::string path;
      std::getline(words >> std::ws, path);
      load(trim(path));
    } else {
      err_ << "unknown directive " << command << " (try :help)\n";
    }
    return true;
  }

  void load(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err_ << path << ": cannot open file\n";
      return;
    }
    std::ostringstream text;
    text << file.rdbuf();
    ParseResult parsed = parse_program(text.str(), timeline_);
    if (!parsed.ok()) {
      report(err_, path, parsed.diagnostics);
      return;
    }
    adopt_timeline(parsed.program.timeline);
    std::size_t clauses = 0;
    std::size_t queries = 0;
    for (const auto& statement : parsed.program.statements) {
      if (const auto* fact = std::get_if<FactStmt>(&statement)) {
        kb_.add(fact->clause);
        ++clauses;
      } else if (const auto* rule = std::get_if<RuleStmt>(&statement)) {
        kb_.add(rule->clause);
        ++clauses;
      } else if (std::holds_alternative<QueryStmt>(statement)) {
        ++queries;
      }
    }
    out_ << "% loaded " << path << ": " << clauses << " clauses";
    if (queries > 0) out_ << " (" << queries << " queries not run)";
    out_ << "\n";
  }

  void adopt_timeline(const TimelinePtr& timeline) {
    if (!timeline || timeline == timeline_) return;
    timeline_ = timeline;
    KnowledgeBase rebuilt(timeline_);
    for (const auto& clause : kb_.clauses()) rebuilt.add(clause);
    kb_ = std::move(rebuilt);
  }

  void process(const std::string& text, const std::string& name) {
    ParseResult parsed = parse_program(text, timeline_);
    if (!parsed.ok()) {
      report(err_, name, parsed.diagnostics);
      return;
    }
    adopt_timeline(parsed.program.timeline);
    for (const auto& statement : parsed.program.statements) {
      if (const auto* fact = std::get_if<FactStmt>(&statement)) kb_.add(fact->clause);
      if (const auto* rule = std::get_if<RuleStmt>(&statement)) kb_.add(rule->clause);
      if (const auto* query = std::get_if<QueryStmt>(&statement)) answer(query->goals);
    }
  }

  // Prints answers one at a time. When another answer exists the user is
  // asked for ";" to see it; any other non-empty line stops the enumeration
  // and is read as the next input.
  void answer(const std::vector<Goal>& goals) {
    const AnswerFormat format = answer_format(options_);
    std::optional<Answer> pending;
    std::size_t shown = 0;
    try {
      solve(kb_, goals, solve_options(options_, &err_), [&](const Answer& a) {
        if (pending) {
          out_ << format_answer(*pending, format) << "\n";
          ++shown;
          if (format == AnswerFormat::Text && !want_more()) {
            pending.reset();
            return false;
          }
        }
        pending = a;
        return true;
      });
    } catch (const Error& e) {
      err_ << "runtime error: " << e.what() << "\n";
      return;
    }
    if (pending) {
      out_ << format_answer(*pending, format) << "\n";
      ++shown;
    }
    if (shown == 0 && format == AnswerFormat::Text) out_ << format_no_answers(format) << "\n";
  }

  bool want_more() {
    if (show_prompt_) out_ << "more? (; for next) " << std::flush;
    std::string line;
    if (!next_line(line)) return false;
    const std::string t = trim(line);
    if (t == ";") return true;
    if (!t.empty()) pushed_back_ = line;
    return false;
  }

  const RunOptions& options_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool show_prompt_;
  std::optional<std::string> pushed_back_;
  TimelinePtr timeline_;
  KnowledgeBase kb_;
};

}  // namespace

int repl(const RunOptions& options, std::istream& in, std::ostream& out, std::ostream& err, bool show_prompt) {
  return Session(options, in, out, err, show_prompt).run();
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy temporal logic interpreter"};
  app.require_subcommand(1);

  RunOptions options;
  auto add_flags = [&options](CLI::App* sub) {
    sub->add_option("--tau-min", options.tau_min, "Treat proofs with degree <= this as failures")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_flag("--best-only", options.best_only, "Keep only the highest-degree answer per binding");
    sub->add_flag("--json", options.machine_output, "One JSON record per answer");
    sub->add_flag("--trace", options.trace, "Print temporal unifications and relation degrees to stderr");
    sub->add_option("--depth-limit", options.depth_limit, "Maximum nesting of resolutions")
        ->check(CLI::PositiveNumber);
  };

  auto* run = app.add_subcommand("run", "Run the queries of .tl files");
  add_flags(run);
  run->add_option("files", options.inputs, "Source files")->required();
  auto* interactive = app.add_subcommand("repl", "Interactive session");
  add_flags(interactive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (run->parsed()) {
    int status = kSuccess;
    for (const auto& path : options.inputs) status = std::max(status, run_file(path, options, out, err));
    return status;
  }
  const bool tty = &in == &std::cin && ::isatty(STDIN_FILENO) != 0;
  return repl(options, in, out, err, tty);
}

}  // namespace fuzzytl::cli
