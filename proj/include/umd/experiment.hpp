#pragma once

#include <string>
#include <vector>

#include "umd/config.hpp"

namespace umd {

struct CellResult {
  std::string policy;
  double gamma = 0.0;
  bool ok = false;
  double final_gap = kNaN;
  std::string trace_file;
  std::string error;
};

struct ExperimentReport {
  double f_star = kNaN;
  std::vector<CellResult> cells;
  std::string summary_file;

  bool all_ok() const;
};

/// Runs every (policy, step-size) cell of the sweep, writing one trace
/// CSV per cell plus a summary of final gaps. A failing cell is
/// reported and does not abort the rest. Deterministic given the
/// config.
ExperimentReport run_experiment(const ResolvedExperiment& exp,
                                const std::string& out_dir);

/// Runs a single (policy, step-size) cell.
CellResult run_cell(const ResolvedExperiment& exp, const DualPolicy& policy,
                    double gamma, double f_star, const std::string& out_dir);

/// Reference optimum for the sweep: projected gradient for smooth
/// problems, a long averaged subgradient run otherwise.
double reference_f_star(const ResolvedExperiment& exp);

}  // namespace umd
