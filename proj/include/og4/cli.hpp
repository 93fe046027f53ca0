#pragma once

#include <optional>
#include <string>
#include <vector>

#include "og4/document.hpp"

namespace og4 {

enum class Command { construct, verify, classify, quotient, chain, analyze, export_pair };
enum class OutputFormat { json, text, dot };

std::optional<Command> parse_command(const std::string& name);

struct JobSpec {
  Command command = Command::verify;
  std::string input_path;
  // Used instead of reading input_path when set.
  std::optional<std::string> input_text;
  std::size_t max_order = 1'000'000;
  std::size_t max_sarcs = 10'000'000;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty: standard output
  std::optional<Arc> seed_arc;  // 1-based as given on the command line
  std::optional<std::size_t> valency;
  // Generators (cycle notation) of the subgroup for `quotient`.
  std::vector<std::string> normal;
  // `chain`: also list every basic Cover quotient.
  bool all_basic = false;
};

enum ExitCode { exit_ok = 0, exit_refuted = 1, exit_error = 2 };

struct RunResult {
  int exit_code = exit_ok;
  std::string report;
  std::string message;  // one line for stderr; empty on success
};

// Never throws for bad input; operational failures become exit_error with
// a report naming the problem.
RunResult run(const JobSpec& job);

// Parses the command line, runs the job and writes the report.
int cli_main(int argc, char** argv);

}  // namespace og4
