#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/groebner.hpp"

namespace folia::cli {

enum ExitCode : int {
  kOk = 0,
  kInequalityFalse = 1,
  kInvalidInput = 2,
  kGenericity = 3,
  kBudget = 4,
};

struct JobSpec {
  std::string mode;                  // check, singular, degz2, delta, bounds, germ, witness, thma
  std::string input_path;            // "-" reads stdin
  std::optional<std::string> field;  // "q" or "fp:P"; overrides the document
  std::uint64_t seed = 1;
  unsigned retries = 8;
  GbLimits limits{};
  bool json = true;
  bool timing = true;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;  // the report, newline terminated
};

const std::vector<std::string>& modes();

// Runs one job on an already loaded document.
RunResult run_document(const JobSpec& job, std::string_view document);

// Reads job.input_path and runs it. A missing file is invalid input.
RunResult run(const JobSpec& job);

// Parses argv into a job; on failure or --help fills `message` and returns
// nullopt with `exit_code` set.
std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::string& message, int& exit_code);

}  // namespace folia::cli
