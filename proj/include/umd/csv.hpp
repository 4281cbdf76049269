#pragma once

#include <string>
#include <vector>

#include "umd/problems.hpp"
#include "umd/solvers.hpp"

namespace umd {

enum class CsvFormat { LastColumnTarget, SeparateLabels };

/// Reads a numeric CSV into a Dataset. With LastColumnTarget the final
/// column is the target; with SeparateLabels all columns are features
/// and targets come one-per-line from labels_path. feature_scale
/// multiplies every feature entry, targets are left untouched.
Dataset ingest_csv(const std::string& path, CsvFormat format,
                   const std::string& labels_path, double feature_scale);

/// One row per iteration: t,f,gap,theta_norm,branch,res_I,res_II with
/// gap_t = f_t - f_star. Fixed formatting, no timestamps, so identical
/// runs produce identical bytes.
void write_trace_csv(const std::string& path, const Trace& trace,
                     double f_star);

}  // namespace umd
