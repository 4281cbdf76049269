#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umd/csv.hpp"
#include "umd/geometry.hpp"
#include "umd/online.hpp"
#include "umd/problems.hpp"
#include "umd/regularizer.hpp"
#include "umd/solvers.hpp"
#include "umd/vi.hpp"

namespace umd {

/// Parsed key/value view of an experiment file. The grammar is
/// INI-style: `[section]` headers, `key = value` lines, `#` comments.
struct ExperimentConfig {
  std::map<std::string, std::map<std::string, std::string>> sections;

  static ExperimentConfig parse_file(const std::string& path);
  static ExperimentConfig parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
};

/// Everything needed to run a sweep, resolved from the config: oracles
/// constructed, kinds validated, lists parsed.
struct ResolvedExperiment {
  Problem problem;
  ConstraintSet set;
  Regularizer regularizer;
  std::vector<DualPolicy> policies;
  std::vector<double> step_sizes;
  int T = 1;
  Vector theta_1;
  bool certify = false;
  int fstar_budget = 20000;
};

ResolvedExperiment resolve_experiment(const ExperimentConfig& config);

/// "da", "md", "gold:K" or "gold:K:TAU".
DualPolicy parse_policy(const std::string& name);

/// [saddle] section: payoff matrix, horizon, step-size and anchor
/// policy for an extragradient run on the product of two simplices.
struct ResolvedSaddle {
  MonotoneOperator op;
  Regularizer regularizer;
  ConstraintSet set;
  double gamma = 0.0;
  int T = 1;
  ZetaPolicy zeta_policy = ZetaPolicy::MD;
};

ResolvedSaddle resolve_saddle(const ExperimentConfig& config);

/// [game] section: adversary, learning rate (explicit or tuned), and
/// horizon for an online regret run over the [set]/[regularizer] pair.
struct ResolvedGame {
  Regularizer regularizer;
  ConstraintSet set;
  Adversary adversary;
  double eta = 0.0;  // 0 means: tune from the bound
  int T = 1;
  Vector theta_1;
  DualPolicy policy;
};

ResolvedGame resolve_game(const ExperimentConfig& config);

}  // namespace umd
