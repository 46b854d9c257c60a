#pragma once

// Batch commands behind the command-line driver. Each produces a Report whose
// body is a JSON document with a fixed field order.

#include <cstdint>
#include <string>

#include "origami/suites.hpp"

namespace origami {

enum ExitCode : int {
  kPass = 0,
  kSuiteFailure = 1,
  kUsageError = 2,
  kEvaluationExhausted = 3,
};

struct RunConfig {
  std::string command;  // "compute" or "verify"
  std::string suite;
  int r1 = 1;
  int r2 = 0;
  int order = 6;
  std::uint64_t seed = 1;
  int num_points = 5;
  std::string out;     // empty: stdout
  bool timing = false;  // adds wall time to the report (breaks byte-identity)
};

struct Report {
  Json body;
  int exit_code = kPass;

  /// Pretty-printed body with a trailing newline.
  std::string serialize() const;
};

Report cmd_compute(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);

/// Dispatches on cfg.command.
Report run(const RunConfig& cfg);

}  // namespace origami
