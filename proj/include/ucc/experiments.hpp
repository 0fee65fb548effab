#pragma once

#include <iosfwd>
#include <string>

#include "ucc/config.hpp"

namespace ucc {

// Each command writes machine-readable CSV (with '#' metadata lines) to
// `csv` and human-oriented summary lines to `info`, returning a process
// exit code. Exceptions for bad configuration or invalid models propagate
// to the caller, which maps them onto exit codes.

// Builds one placement and emits per-file rows plus a load/allocation/delay
// summary.
int cmd_place(const ExperimentConfig& config, std::ostream& csv, std::ostream& info);

// Sweeps one variable and emits per-(value, scheme) metric rows.
int cmd_sweep(const ExperimentConfig& config, std::ostream& csv, std::ostream& info);

// Evaluates cluster sizes: per-K admissibility and delay, or the optimal K
// per backhaul-delay value when a backhaul sweep is configured.
int cmd_cluster(const ExperimentConfig& config, std::ostream& csv, std::ostream& info);

// Monte Carlo check of the analytic rate lower bound across user densities.
// Returns a validation-failure exit code when the bound is violated beyond
// Monte Carlo noise at any point.
int cmd_validate(const ExperimentConfig& config, std::ostream& csv, std::ostream& info);

// Opens config.output (or stdout) and dispatches to the command by name.
int run_command(const std::string& name, const ExperimentConfig& config);

}  // namespace ucc
