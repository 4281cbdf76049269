#pragma once

#include <functional>
#include <span>
#include <string>

#include "umd/solvers.hpp"

namespace umd {

/// Nature's side of the online linear game: given the public history
/// (all past plays and payoffs), produce the next payoff vector, whose
/// dual norm never exceeds bound_M. Deterministic given its inputs, so
/// games replay exactly.
struct Adversary {
  std::string name;
  double bound_M = 0.0;
  // Payoffs are measured in the dual of this norm.
  NormTag primal_norm = NormTag::L2;
  std::function<Vector(int t, std::span<const Vector> plays,
                       std::span<const Vector> payoffs)>
      play;
};

Adversary zero_adversary(Eigen::Index n);
Adversary fixed_adversary(Vector c, NormTag primal_norm);
/// Plays +c on odd rounds and -c on even rounds.
Adversary alternating_adversary(Vector c, NormTag primal_norm);
/// Draws each round's payoff deterministically from `seed` with dual
/// norm exactly M.
Adversary seeded_random_adversary(Eigen::Index n, double M, std::uint64_t seed,
                                  NormTag primal_norm);

struct RegretResult {
  Trace trace;
  double regret = 0.0;
};

/// Plays T rounds of online linear optimization: the decision maker
/// follows the dual policy with increments xi_t = eta * payoff_t, the
/// adversary sees only the published history. The set must be compact.
RegretResult run_regret_game(const Regularizer& h, const ConstraintSet& set,
                             const Adversary& adversary, double eta, int T,
                             const Vector& theta_1, const DualPolicy& policy);

/// Exact regret of a played trace: the best fixed action in hindsight
/// via the linear-minimization oracle, minus the collected payoff.
double compute_regret(const Trace& trace, const ConstraintSet& set);

}  // namespace umd
