#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzytl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDiagnostics = 1,
  kRuntimeError = 2,
  kUsageError = 3,
};

struct RunOptions {
  std::vector<std::string> inputs;
  double tau_min = 0.0;
  bool best_only = false;
  bool machine_output = false;
  bool trace = false;
  std::size_t depth_limit = 10000;
};

/// Loads every clause of the file, then runs its queries in source order.
/// Answers go to `out`; diagnostics, runtime errors and trace lines go to
/// `err`. Returns an ExitCode.
int run_file(const std::string& path, const RunOptions& options, std::ostream& out, std::ostream& err);

/// Same as run_file on in-memory source; `name` labels diagnostics.
int run_source(const std::string& text, const std::string& name, const RunOptions& options, std::ostream& out,
               std::ostream& err);

/// Interactive session. Facts and rules are asserted, queries answered one
/// at a time (";" asks for the next answer). Directives: :load <path>,
/// :timeline, :help, :quit.
int repl(const RunOptions& options, std::istream& in, std::ostream& out, std::ostream& err, bool show_prompt);

/// Full command line: `run <file>...` or `repl`, with --tau-min, --best-only,
/// --json, --trace and --depth-limit.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fuzzytl::cli
