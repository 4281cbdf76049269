#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "umd/bregman.hpp"
#include "umd/online.hpp"

using namespace umd;
using testing::Rng;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Trace hand_trace(const std::vector<Vector>& xs,
                 const std::vector<Vector>& payoffs) {
  Trace trace;
  for (size_t i = 0; i < xs.size(); ++i) {
    trace.t.push_back(static_cast<int>(i) + 1);
    trace.x.push_back(xs[i]);
    trace.theta.push_back(Vector::Zero(xs[i].size()));
    trace.xi.push_back(payoffs[i]);
    trace.f_value.push_back(0.0);
    trace.branch.push_back(Branch::DAStep);
    trace.res_I.push_back(kNaN);
    trace.res_II.push_back(kNaN);
    trace.payoff.push_back(payoffs[i]);
  }
  return trace;
}

}  // namespace

TEST_CASE("compute_regret examples") {
  const ConstraintSet sx = simplex(2);
  const Vector uniform = vec2(0.5, 0.5);

  CHECK(compute_regret(hand_trace({uniform, uniform},
                                  {Vector::Zero(2), Vector::Zero(2)}),
                       sx) == 0.0);

  // Single round: the comparator is the best vertex.
  CHECK(compute_regret(hand_trace({uniform}, {vec2(1, 0)}), sx) ==
        doctest::Approx(0.5));

  // Opposing rounds cancel both the comparator and the collected payoff.
  CHECK(compute_regret(hand_trace({uniform, uniform},
                                  {vec2(1, 0), vec2(-1, 0)}),
                       sx) == doctest::Approx(0.0));

  CHECK_THROWS_AS(compute_regret(hand_trace({uniform}, {vec2(1, 0)}),
                                 full_space(2)),
                  UnboundedError);
}

TEST_CASE("zero adversary incurs zero regret") {
  const Regularizer h = entropy_simplex_regularizer(3);
  const RegretResult result =
      run_regret_game(h, h.domain, zero_adversary(3), 0.5, 20, Vector::Zero(3),
                      DualPolicy::da());
  CHECK(result.regret == 0.0);
}

TEST_CASE("fixed adversary: closed-form comparator") {
  const Regularizer h = entropy_simplex_regularizer(4);
  Vector c(4);
  c << 0.3, -0.2, 0.9, 0.0;
  const int T = 50;
  const RegretResult result = run_regret_game(
      h, h.domain, fixed_adversary(c, h.norm), 0.1, T, Vector::Zero(4),
      DualPolicy::da());
  double collected = 0.0;
  for (const Vector& x : result.trace.x) {
    collected += c.dot(x);
  }
  CHECK(result.regret ==
        doctest::Approx(T * c.maxCoeff() - collected).epsilon(1e-12));
  // The decision maker learns the best coordinate: sublinear regret.
  CHECK(result.regret < 0.5 * T * (c.maxCoeff() - c.minCoeff()));
}

TEST_CASE("alternating adversary meets the tuned bound") {
  const Regularizer h = entropy_simplex_regularizer(2);
  const Vector e1 = vec2(1, 0);
  const int T = 200;
  const Vector theta1 = Vector::Zero(2);
  const Vector x1 = grad_conjugate(h, theta1);
  const double omega = estimate_omega(h, h.domain, x1, theta1);
  const double M = 1.0;  // dual norm of +-e1 is its max entry
  const double K = h.strong_convexity_K;
  const double eta = std::sqrt(2.0 * K * omega / (M * T));
  const RegretResult result =
      run_regret_game(h, h.domain, alternating_adversary(e1, h.norm), eta, T,
                      theta1, DualPolicy::da());
  CHECK(result.regret <= std::sqrt(2.0 * M * T * omega / K) + 1e-6);
}

TEST_CASE("theorem bound holds for random adversaries and both policies") {
  const Regularizer h = entropy_simplex_regularizer(6);
  const int T = 300;
  const Vector theta1 = Vector::Zero(6);
  const Vector x1 = grad_conjugate(h, theta1);
  const double omega = estimate_omega(h, h.domain, x1, theta1);
  const double M = 1.0;
  const double K = h.strong_convexity_K;
  for (const DualPolicy& policy : {DualPolicy::da(), DualPolicy::md()}) {
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
      const Adversary adv = seeded_random_adversary(6, M, seed, h.norm);
      for (double eta : {0.01, 0.1, 1.0}) {
        const RegretResult result =
            run_regret_game(h, h.domain, adv, eta, T, theta1, policy);
        const double bound = omega / eta + eta * M * M * T / (2.0 * K);
        CHECK(result.regret <= bound + 1e-6);
      }
    }
  }
}

TEST_CASE("game rejects bad configurations") {
  const Regularizer free = euclidean_regularizer(full_space(2));
  CHECK_THROWS_AS(run_regret_game(free, free.domain, zero_adversary(2), 0.1,
                                  10, Vector::Zero(2), DualPolicy::da()),
                  ArgumentError);
  const Regularizer h = entropy_simplex_regularizer(2);
  CHECK_THROWS_AS(run_regret_game(h, h.domain, zero_adversary(2), -1.0, 10,
                                  Vector::Zero(2), DualPolicy::da()),
                  ArgumentError);
  CHECK_THROWS_AS(run_regret_game(h, h.domain, zero_adversary(2), 0.1, 10,
                                  Vector::Zero(2), DualPolicy::gold(2)),
                  ArgumentError);
}

TEST_CASE("bound violations are detected") {
  const Regularizer h = entropy_simplex_regularizer(2);
  Adversary liar = fixed_adversary(vec2(3.0, 0), h.norm);
  liar.bound_M = 1.0;  // declared bound below the actual payoff norm
  CHECK_THROWS_AS(run_regret_game(h, h.domain, liar, 0.1, 5, Vector::Zero(2),
                                  DualPolicy::da()),
                  BoundViolation);
}

TEST_CASE("decision maker is causal") {
  const Regularizer h = entropy_simplex_regularizer(3);
  // Two adversaries that agree up to round 5 and then diverge.
  const auto make = [](double late_value) {
    Adversary adv;
    adv.name = "switch";
    adv.bound_M = 1.0;
    adv.primal_norm = NormTag::L1;
    adv.play = [late_value](int t, std::span<const Vector> plays,
                            std::span<const Vector>) -> Vector {
      Vector z = Vector::Zero(3);
      // Reacts to the decision maker's current play: allowed, Nature
      // moves second within the round.
      z(0) = t <= 5 ? 0.3 : late_value;
      z(1) = plays.empty() ? 0.0 : 0.5 * plays.back()(0);
      return z;
    };
    return adv;
  };
  const RegretResult a = run_regret_game(h, h.domain, make(0.9), 0.2, 10,
                                         Vector::Zero(3), DualPolicy::da());
  const RegretResult b = run_regret_game(h, h.domain, make(-0.9), 0.2, 10,
                                         Vector::Zero(3), DualPolicy::da());
  // Plays through round 6 depend only on payoffs through round 5.
  for (int t = 0; t < 6; ++t) {
    CHECK((a.trace.x[static_cast<size_t>(t)] -
           b.trace.x[static_cast<size_t>(t)])
              .norm() == 0.0);
  }
  CHECK((a.trace.x[7] - b.trace.x[7]).norm() > 0.0);
}

TEST_CASE("adversary sees the current play") {
  const Regularizer h = entropy_simplex_regularizer(2);
  Adversary mirror;
  mirror.name = "mirror";
  mirror.bound_M = 1.0;
  mirror.primal_norm = NormTag::L1;
  bool saw_current = false;
  mirror.play = [&saw_current](int t, std::span<const Vector> plays,
                               std::span<const Vector> payoffs) -> Vector {
    if (static_cast<int>(plays.size()) == t &&
        static_cast<int>(payoffs.size()) == t - 1) {
      saw_current = true;
    }
    return Vector::Zero(2);
  };
  run_regret_game(h, h.domain, mirror, 0.1, 3, Vector::Zero(2),
                  DualPolicy::da());
  CHECK(saw_current);
}
