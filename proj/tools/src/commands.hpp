#pragma once

#include <iosfwd>
#include <string>

#include "qpcohom/report.hpp"

namespace qpc::cli {

enum ExitCode { kOk = 0, kViolated = 1, kInputError = 2, kResourceCap = 3 };

struct CommandOptions {
  bool oracle = false;
  bool reduce = false;
  std::string field;  // empty: QP_FIELD or rationals
  int max_len = -1;
};

struct CommandResult {
  Report report;
  std::string human;
};

// Runs one command on one input file. Library errors propagate.
CommandResult run_command(const std::string& command, const std::string& path, const CommandOptions& opts);

// Full command line entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qpc::cli
