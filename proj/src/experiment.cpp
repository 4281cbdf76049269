#include "umd/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

namespace umd {

namespace {

std::string format_gamma(double gamma) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", gamma);
  std::string s(buf);
  std::erase(s, '+');
  return s;
}

}  // namespace

bool ExperimentReport::all_ok() const {
  for (const CellResult& cell : cells) {
    if (!cell.ok) {
      return false;
    }
  }
  return true;
}

double reference_f_star(const ResolvedExperiment& exp) {
  if (exp.problem.smoothness_L) {
    return estimate_f_star(exp.problem, exp.set, exp.fstar_budget).value;
  }
  // Nonsmooth reference: averaged subgradient run with the tuned
  // constant step, best value seen along iterates and averages.
  const double omega = std::sqrt(
      2.0 * std::max(estimate_omega(exp.regularizer, exp.set, exp.theta_1,
                                    exp.theta_1),
                     1e-12));
  const double M = exp.problem.subgrad_bound_M.value_or(1.0);
  const int T = std::max(exp.fstar_budget, 100);
  const StepSchedule schedule = StepSchedule::lipschitz_optimal(
      omega, M, exp.regularizer.strong_convexity_K, T);
  const Trace trace = run_quasi_monotone(exp.problem, exp.regularizer, exp.set,
                                         schedule, T, exp.theta_1);
  double best = kInf;
  for (size_t i = 0; i < trace.size(); ++i) {
    best = std::min(best, exp.problem.value(trace.y[i]));
    best = std::min(best, trace.f_value[i]);
  }
  best = std::min(best, exp.problem.value(trace.last_y));
  return best;
}

CellResult run_cell(const ResolvedExperiment& exp, const DualPolicy& policy,
                    double gamma, double f_star, const std::string& out_dir) {
  CellResult cell;
  cell.policy = policy.name();
  cell.gamma = gamma;
  cell.trace_file = out_dir + "/trace_" + policy.name() + "_" +
                    format_gamma(gamma) + ".csv";
  try {
    RunOptions options;
    options.certify = exp.certify;
    const Trace trace =
        run_umd(exp.problem, exp.regularizer, exp.set, policy,
                StepSchedule::constant(gamma), exp.T, exp.theta_1, options);
    write_trace_csv(cell.trace_file, trace, f_star);
    cell.final_gap = trace.f_value.back() - f_star;
    cell.ok = true;
  } catch (const Error& e) {
    cell.error = e.what();
  }
  return cell;
}

ExperimentReport run_experiment(const ResolvedExperiment& exp,
                                const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir + ": " +
                  ec.message());
  }

  ExperimentReport report;
  report.f_star = reference_f_star(exp);
  for (const DualPolicy& policy : exp.policies) {
    for (double gamma : exp.step_sizes) {
      report.cells.push_back(
          run_cell(exp, policy, gamma, report.f_star, out_dir));
    }
  }

  report.summary_file = out_dir + "/summary.csv";
  std::FILE* out = std::fopen(report.summary_file.c_str(), "w");
  if (out == nullptr) {
    throw IoError("cannot write " + report.summary_file);
  }
  std::fputs("policy,gamma,status,final_gap,trace_file,error\n", out);
  for (const CellResult& cell : report.cells) {
    std::fprintf(out, "%s,%.17g,%s,%.17g,%s,%s\n", cell.policy.c_str(),
                 cell.gamma, cell.ok ? "ok" : "failed", cell.final_gap,
                 cell.ok ? cell.trace_file.c_str() : "",
                 cell.error.c_str());
  }
  std::fclose(out);
  return report;
}

}  // namespace umd
