#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ptchain/config.hpp"
#include "ptchain/io.hpp"

namespace ptchain {

struct CommandResult {
  Table table;
  /// Per-item failures that did not abort the run (correspond sweeps).
  /// Nonempty means the run exits with the numerical-failure code.
  std::vector<std::string> failures;
};

/// Executes one parsed run and returns its table. Hard errors propagate as
/// exceptions; std::invalid_argument / std::domain_error mean a bad input,
/// anything else a numerical failure.
CommandResult run_command(const RunConfig& config);

/// Full CLI pipeline: runs the command, writes the table to
/// config.out_path (or data_out when no path is set) in the configured
/// format, and reports errors as one JSON record on diag. Returns the
/// process exit code: 0 success, 1 validation failure, 2 runtime or
/// numerical failure.
int run(const RunConfig& config, std::ostream& data_out, std::ostream& diag);

}  // namespace ptchain
