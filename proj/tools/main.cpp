#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "umd/config.hpp"
#include "umd/experiment.hpp"
#include "umd/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitIo = 3;

int classify(const umd::Error& e) {
  if (dynamic_cast<const umd::IoError*>(&e) != nullptr) {
    return kExitIo;
  }
  if (dynamic_cast<const umd::CertificationError*>(&e) != nullptr ||
      dynamic_cast<const umd::BoundViolation*>(&e) != nullptr) {
    return kExitSolver;
  }
  return kExitConfig;
}

void ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw umd::IoError("cannot create " + out_dir + ": " + ec.message());
  }
}

umd::ExperimentConfig load_config(const std::string& path, long seed_override) {
  umd::ExperimentConfig config = umd::ExperimentConfig::parse_file(path);
  if (seed_override >= 0) {
    config.sections["problem"]["seed"] = std::to_string(seed_override);
    config.sections["game"]["seed"] = std::to_string(seed_override);
  }
  return config;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              bool certify, long seed) {
  umd::ExperimentConfig config = load_config(config_path, seed);
  umd::ResolvedExperiment exp = umd::resolve_experiment(config);
  if (certify) {
    exp.certify = true;
  }
  const umd::ExperimentReport report = umd::run_experiment(exp, out_dir);
  std::printf("f_star estimate: %.12g\n", report.f_star);
  for (const umd::CellResult& cell : report.cells) {
    if (cell.ok) {
      std::printf("cell %-10s gamma=%-12.6g final_gap=%.6g -> %s\n",
                  cell.policy.c_str(), cell.gamma, cell.final_gap,
                  cell.trace_file.c_str());
    } else {
      std::printf("cell %-10s gamma=%-12.6g FAILED: %s\n", cell.policy.c_str(),
                  cell.gamma, cell.error.c_str());
    }
  }
  std::printf("summary: %s\n", report.summary_file.c_str());
  return report.all_ok() ? kExitOk : kExitSolver;
}

int cmd_solve(const std::string& config_path, const std::string& out_dir,
              bool certify, long seed, const std::string& policy,
              double gamma) {
  umd::ExperimentConfig config = load_config(config_path, seed);
  umd::ResolvedExperiment exp = umd::resolve_experiment(config);
  if (certify) {
    exp.certify = true;
  }
  ensure_out_dir(out_dir);
  const double f_star = umd::reference_f_star(exp);
  const umd::CellResult cell =
      umd::run_cell(exp, umd::parse_policy(policy), gamma, f_star, out_dir);
  if (!cell.ok) {
    std::fprintf(stderr, "cell failed: %s\n", cell.error.c_str());
    return kExitSolver;
  }
  std::printf("f_star estimate: %.12g\n", f_star);
  std::printf("final_gap=%.6g -> %s\n", cell.final_gap,
              cell.trace_file.c_str());
  return kExitOk;
}

int cmd_vi(const std::string& config_path, const std::string& out_dir,
           long seed) {
  umd::ExperimentConfig config = load_config(config_path, seed);
  const umd::ResolvedSaddle saddle = umd::resolve_saddle(config);
  ensure_out_dir(out_dir);
  const umd::UmpResult result =
      umd::run_ump(saddle.op, saddle.regularizer, saddle.set, saddle.gamma,
                   saddle.T, umd::Vector::Zero(saddle.regularizer.n),
                   saddle.zeta_policy);
  const double gap = umd::vi_gap(saddle.op, saddle.set, result.y_bar,
                                 umd::probe_points(saddle.set));

  const std::string path = out_dir + "/ump_trace.csv";
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (out == nullptr) {
    throw umd::IoError("cannot write " + path);
  }
  std::fputs("t,res_fenchel,res_var\n", out);
  for (size_t i = 0; i < result.trace.size(); ++i) {
    std::fprintf(out, "%d,%.17g,%.17g\n", result.trace.t[i],
                 result.trace.res_I[i], result.trace.res_II[i]);
  }
  std::fclose(out);

  std::printf("vertex-probe gap of averaged point: %.12g\n", gap);
  std::printf("y_bar:");
  for (Eigen::Index i = 0; i < result.y_bar.size(); ++i) {
    std::printf(" %.12g", result.y_bar(i));
  }
  std::printf("\ntrace: %s\n", path.c_str());
  return kExitOk;
}

int cmd_regret(const std::string& config_path, const std::string& out_dir,
               long seed) {
  umd::ExperimentConfig config = load_config(config_path, seed);
  const umd::ResolvedGame game = umd::resolve_game(config);
  ensure_out_dir(out_dir);

  const umd::Vector x1 =
      umd::grad_conjugate(game.regularizer, game.theta_1);
  const double omega =
      umd::estimate_omega(game.regularizer, game.set, x1, game.theta_1);
  const double K = game.regularizer.strong_convexity_K;
  const double M = game.adversary.bound_M;
  double eta = game.eta;
  if (!(eta > 0.0)) {
    if (!(M > 0.0) || !(omega > 0.0)) {
      eta = 1.0;
    } else {
      eta = std::sqrt(2.0 * K * omega /
                      (M * M * static_cast<double>(game.T)));
    }
  }
  const umd::RegretResult result =
      umd::run_regret_game(game.regularizer, game.set, game.adversary, eta,
                           game.T, game.theta_1, game.policy);

  const std::string path = out_dir + "/regret_trace.csv";
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (out == nullptr) {
    throw umd::IoError("cannot write " + path);
  }
  std::fputs("t,payoff_collected,payoff_norm\n", out);
  for (size_t i = 0; i < result.trace.size(); ++i) {
    std::fprintf(out, "%d,%.17g,%.17g\n", result.trace.t[i],
                 result.trace.f_value[i],
                 umd::dual_norm(game.regularizer.norm,
                                result.trace.payoff[i]));
  }
  std::fclose(out);

  const double bound =
      omega / eta + eta * M * M * static_cast<double>(game.T) / (2.0 * K);
  std::printf("eta=%.6g omega=%.6g regret=%.12g bound=%.12g\n", eta, omega,
              result.regret, bound);
  std::printf("trace: %s\n", path.c_str());
  return result.regret <= bound + 1e-6 ? kExitOk : kExitSolver;
}

int cmd_selftest() {
  const umd::SelfTestReport report = umd::run_selftest();
  for (const umd::SelfTestCheck& check : report.checks) {
    std::printf("%-32s %s  %s\n", check.name.c_str(),
                check.ok ? "PASS" : "FAIL", check.detail.c_str());
  }
  return report.all_ok() ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained first-order optimization harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  bool certify = false;
  long seed = -1;
  app.add_option("--config", config_path, "experiment config file");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--certify", certify, "certify every solver step");
  app.add_option("--seed", seed, "override the config seed");

  std::string policy = "da";
  double gamma = 1.0;
  CLI::App* solve = app.add_subcommand("solve", "run one (policy, step) cell");
  solve->add_option("--policy", policy, "da | md | gold:K | gold:K:TAU");
  solve->add_option("--gamma", gamma, "constant step-size")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "run the full config sweep");
  CLI::App* vi = app.add_subcommand("vi", "extragradient saddle-point run");
  CLI::App* regret = app.add_subcommand("regret", "online regret game");
  CLI::App* selftest = app.add_subcommand("selftest", "invariant battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) {
      return cmd_selftest();
    }
    if (config_path.empty()) {
      std::fprintf(stderr, "error: --config is required\n");
      return kExitConfig;
    }
    if (sweep->parsed()) {
      return cmd_sweep(config_path, out_dir, certify, seed);
    }
    if (solve->parsed()) {
      return cmd_solve(config_path, out_dir, certify, seed, policy, gamma);
    }
    if (vi->parsed()) {
      return cmd_vi(config_path, out_dir, seed);
    }
    if (regret->parsed()) {
      return cmd_regret(config_path, out_dir, seed);
    }
  } catch (const umd::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return classify(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitConfig;
}
