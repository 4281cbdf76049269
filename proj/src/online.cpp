#include "umd/online.hpp"

#include <cmath>
#include <random>

namespace umd {

Adversary zero_adversary(Eigen::Index n) {
  Adversary adv;
  adv.name = "zero";
  adv.bound_M = 0.0;
  adv.play = [n](int, std::span<const Vector>, std::span<const Vector>) {
    return Vector::Zero(n);
  };
  return adv;
}

Adversary fixed_adversary(Vector c, NormTag primal_norm) {
  Adversary adv;
  adv.name = "fixed";
  adv.primal_norm = primal_norm;
  adv.bound_M = dual_norm(primal_norm, c);
  adv.play = [c](int, std::span<const Vector>, std::span<const Vector>) {
    return c;
  };
  return adv;
}

Adversary alternating_adversary(Vector c, NormTag primal_norm) {
  Adversary adv;
  adv.name = "alternating";
  adv.primal_norm = primal_norm;
  adv.bound_M = dual_norm(primal_norm, c);
  adv.play = [c](int t, std::span<const Vector>, std::span<const Vector>) {
    return t % 2 == 1 ? c : Vector(-c);
  };
  return adv;
}

Adversary seeded_random_adversary(Eigen::Index n, double M, std::uint64_t seed,
                                  NormTag primal_norm) {
  if (!(M > 0.0)) {
    throw ArgumentError("seeded_random_adversary: M must be positive");
  }
  Adversary adv;
  adv.name = "seeded-random";
  adv.primal_norm = primal_norm;
  adv.bound_M = M;
  // History-independent stream: round t gets the t-th draw, scaled to
  // dual norm exactly M.
  adv.play = [n, M, seed, primal_norm](int t, std::span<const Vector>,
                                       std::span<const Vector>) -> Vector {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL *
                                   static_cast<std::uint64_t>(t));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      z(i) = gauss(rng);
    }
    const double dn = dual_norm(primal_norm, z);
    if (dn == 0.0) {
      return Vector::Zero(n);
    }
    return (M / dn) * z;
  };
  return adv;
}

RegretResult run_regret_game(const Regularizer& h, const ConstraintSet& set,
                             const Adversary& adversary, double eta, int T,
                             const Vector& theta_1, const DualPolicy& policy) {
  if (!set.compact) {
    throw ArgumentError("run_regret_game: the action set must be compact");
  }
  if (!(eta > 0.0)) {
    throw ArgumentError("run_regret_game: eta must be positive");
  }
  if (T < 1) {
    throw ArgumentError("run_regret_game: T must be >= 1");
  }
  if (policy.is_gold()) {
    throw ArgumentError(
        "run_regret_game: GoLD policies need an objective to compare; use "
        "DA or MD");
  }
  if (policy.needs_mirror() && !h.mirror) {
    throw UnsupportedError("run_regret_game: policy " + policy.name() +
                           " needs a mirror-map side");
  }
  require_dim(theta_1, h.n, "run_regret_game theta_1");

  Trace trace;
  UmdState state;
  state.t = 1;
  state.theta = theta_1;
  state.x = grad_conjugate(h, theta_1);

  std::vector<Vector> plays;
  plays.reserve(static_cast<size_t>(T));

  for (int t = 1; t <= T; ++t) {
    // The decision maker commits to x_t, then Nature answers with full
    // knowledge of the round's play.
    plays.push_back(state.x);
    const Vector zeta =
        adversary.play(t, std::span<const Vector>(plays),
                       std::span<const Vector>(trace.payoff));
    require_dim(zeta, h.n, "adversary payoff");
    const double zn = dual_norm(adversary.primal_norm, zeta);
    if (zn > adversary.bound_M + 1e-12) {
      throw BoundViolation("adversary exceeded its bound at round " +
                           std::to_string(t) + ": " + std::to_string(zn) +
                           " > " + std::to_string(adversary.bound_M));
    }
    const Vector xi = eta * zeta;

    trace.t.push_back(t);
    trace.x.push_back(state.x);
    trace.theta.push_back(state.theta);
    trace.xi.push_back(xi);
    trace.f_value.push_back(zeta.dot(state.x));
    trace.branch.push_back(t == 1 ? Branch::None
                                  : (policy.kind == DualPolicy::Kind::MD
                                         ? Branch::MDChosen
                                         : Branch::DAStep));
    trace.res_I.push_back(kNaN);
    trace.res_II.push_back(kNaN);
    trace.payoff.push_back(zeta);

    state = umd_step(h, set, state, xi, policy);
  }
  trace.last = state;

  RegretResult result;
  result.regret = compute_regret(trace, set);
  result.trace = std::move(trace);
  return result;
}

double compute_regret(const Trace& trace, const ConstraintSet& set) {
  if (trace.payoff.size() != trace.size() || trace.size() == 0) {
    throw ArgumentError("compute_regret: trace carries no payoff sequence");
  }
  Vector total = Vector::Zero(set.n);
  double collected = 0.0;
  for (size_t i = 0; i < trace.size(); ++i) {
    total += trace.payoff[i];
    collected += trace.payoff[i].dot(trace.x[i]);
  }
  // max over X of <total, x> through the minimization oracle.
  const double best = -support_min(set, Vector(-total)).value;
  return best - collected;
}

}  // namespace umd
