#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sunlie/generators.hpp"

namespace sunlie::cli {

/// Exit statuses of run().
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  ///< verify found differences between closed form and oracle
  kUsage = 2,     ///< bad flags, invalid N or label, unreadable input
  kFailure = 3,   ///< oracle refused, integration failed, output not writable
};

/// Timings of the bench subcommand, in seconds.
struct BenchResult {
  int n_dim = 0;
  std::size_t f_count = 0;
  std::size_t d_count = 0;
  double closed_form_seconds = 0.0;
  std::optional<double> oracle_seconds;  ///< empty when the oracle was refused
  std::string refusal;                   ///< refusal message including the cost estimate
};

/// Times closed-form f+d generation (best of `repeats`) and, if N is within
/// the oracle ceiling, one full oracle run for both kinds.
BenchResult run_bench(const AlgebraConfig& cfg, int repeats, int ceiling);

/// Runs the command line `args` (without the program name) and returns the
/// exit status. Normal output goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sunlie::cli
