#pragma once

// Subcommands of the mirror-clone tool. Each builds a report table and an
// exit status; I/O and argument parsing live in main.cpp.

#include "report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorclone::app {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& message)
      : std::runtime_error(message) {}
};

enum class Variant { V1, V2, Both };

struct SweepConfig {
  double theta_min = 0.0;
  double theta_max = 3.14159265358979323846;
  int steps = 181;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::optional<Format> format;  // per-command default when unset
  std::string output;            // empty: standard output
  double phi = 0.0;              // bloch
  Variant variant = Variant::Both;  // circuits
  std::string dump;              // circuits
  int seeds = 5;                 // optimize
  double coupling = 1.0;         // circuits, v2 exchange rate

  /// Throws UsageError.
  void validate() const;
};

/// steps points from theta_min to theta_max inclusive.
std::vector<double> uniform_grid(const SweepConfig& cfg);
/// uniform_grid plus acos(1/sqrt 3) when in range, sorted.
std::vector<double> special_grid(const SweepConfig& cfg);

struct CommandOutput {
  Table table;
  int exit_code = kSuccess;
  Format default_format = Format::Csv;
  std::vector<std::string> messages;  // for the error stream
  std::string dump;                   // serialized circuits, if requested
};

CommandOutput cmd_sweep(const SweepConfig& cfg);
CommandOutput cmd_bloch(const SweepConfig& cfg);
CommandOutput cmd_certify(const SweepConfig& cfg);
CommandOutput cmd_circuits(const SweepConfig& cfg);
CommandOutput cmd_optimize(const SweepConfig& cfg);

/// Runs a named command and renders its report; unknown names throw
/// UsageError.
CommandOutput run_command(const std::string& name, const SweepConfig& cfg);
std::string render(const CommandOutput& result, const SweepConfig& cfg);

}  // namespace mirrorclone::app
