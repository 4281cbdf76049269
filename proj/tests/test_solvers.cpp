#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "umd/bregman.hpp"
#include "umd/solvers.hpp"

using namespace umd;
using testing::Rng;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

UmdState state_from(const Regularizer& h, const Vector& theta) {
  UmdState s;
  s.t = 1;
  s.theta = theta;
  s.x = grad_conjugate(h, theta);
  return s;
}

Problem quadratic_to(const Vector& c) {
  Problem f;
  f.n = c.size();
  f.name = "quadratic";
  f.value = [c](const Vector& x) { return (x - c).squaredNorm(); };
  f.grad = [c](const Vector& x) -> Vector { return 2.0 * (x - c); };
  f.smoothness_L = 2.0;
  return f;
}

}  // namespace

TEST_CASE("umd_step on the unit ball: MD and DA endpoints") {
  const ConstraintSet ball = euclidean_ball(vec2(0, 0), 1.0);
  const Regularizer h = euclidean_regularizer(ball);
  const UmdState s = state_from(h, vec2(0, 0));
  const Vector xi = vec2(2.5, 0);

  const UmdState md = umd_step(h, ball, s, xi, DualPolicy::md());
  CHECK(md.x == vec2(1, 0));
  CHECK(md.theta == vec2(1, 0));

  const UmdState da = umd_step(h, ball, s, xi, DualPolicy::da());
  CHECK(da.x == vec2(1, 0));
  CHECK(da.theta == vec2(2.5, 0));

  CHECK(certify_umd_step(h, ball, s, xi, md, 1e-7).ok);
  CHECK(certify_umd_step(h, ball, s, xi, da, 1e-7).ok);
}

TEST_CASE("umd_step on the paper segment") {
  const ConstraintSet seg = segment_2d(vec2(0, 0), vec2(1, 0));
  const Regularizer h = euclidean_regularizer(seg);
  const UmdState s = state_from(h, vec2(0.5, 0));
  const Vector xi = vec2(-1.5, 0.5);  // lands at (-1, 0.5)

  const UmdState da = umd_step(h, seg, s, xi, DualPolicy::da());
  CHECK(da.x == vec2(0, 0));
  CHECK(da.theta == vec2(-1, 0.5));
  CHECK(certify_umd_step(h, seg, s, xi, da, 1e-7).ok);

  const UmdState md = umd_step(h, seg, s, xi, DualPolicy::md());
  CHECK(md.x == vec2(0, 0));
  CHECK(md.theta == vec2(0, 0));
  CHECK(certify_umd_step(h, seg, s, xi, md, 1e-7).ok);
}

TEST_CASE("certify: DA steps have exactly zero variational residual") {
  Rng rng(41);
  const Regularizer h = entropy_simplex_regularizer(4);
  UmdState s = state_from(h, Vector::Zero(4));
  for (int t = 0; t < 20; ++t) {
    const Vector xi = rng.gaussian(4, 2.0);
    const UmdState next = umd_step(h, h.domain, s, xi, DualPolicy::da());
    const CertifyResult cert = certify_umd_step(h, h.domain, s, xi, next, 1e-7);
    CHECK(cert.ok);
    CHECK(cert.residual_II == 0.0);
    s = next;
  }
}

TEST_CASE("certify: admissible-region structure on the ball") {
  const ConstraintSet ball = euclidean_ball(vec2(0, 0), 1.0);
  const Regularizer h = euclidean_regularizer(ball);
  const UmdState prev = state_from(h, vec2(0, 0));
  const Vector xi = vec2(2.5, 0);
  UmdState next;
  next.t = 2;
  next.x = vec2(1, 0);

  // The admissible duals are exactly the segment [x', theta + xi].
  for (double s : {1.0, 1.3, 1.8, 2.2, 2.5}) {
    next.theta = vec2(s, 0);
    CHECK(certify_umd_step(h, ball, prev, xi, next, 1e-7).ok);
  }
  next.theta = vec2(0.5, 0);  // below the MD endpoint: breaks condition (I)
  auto cert = certify_umd_step(h, ball, prev, xi, next, 1e-7);
  CHECK_FALSE(cert.ok);
  CHECK(cert.residual_I > 1e-7);
  next.theta = vec2(3.0, 0);  // beyond the DA endpoint: breaks condition (II)
  cert = certify_umd_step(h, ball, prev, xi, next, 1e-7);
  CHECK_FALSE(cert.ok);
  CHECK(cert.residual_II > 1e-7);
  next.theta = vec2(2.5, 1.0);  // off the segment: projection mismatch
  cert = certify_umd_step(h, ball, prev, xi, next, 1e-7);
  CHECK_FALSE(cert.ok);
  CHECK(cert.residual_I > 1e-7);
}

TEST_CASE("certify: admissible-region structure on the segment") {
  const ConstraintSet seg = segment_2d(vec2(0, 0), vec2(1, 0));
  const Regularizer h = euclidean_regularizer(seg);
  const UmdState prev = state_from(h, vec2(0, 0));
  const Vector xi = vec2(-1, 0.5);
  UmdState next;
  next.t = 2;
  next.x = vec2(0, 0);

  // The dashed admissible area is [-1, 0] x R: any second coordinate.
  for (double y : {-3.0, 0.0, 1.5, 7.0}) {
    for (double x1 : {-1.0, -0.6, 0.0}) {
      next.theta = vec2(x1, y);
      CHECK(certify_umd_step(h, seg, prev, xi, next, 1e-7).ok);
    }
  }
  // A perturbation that only lifts the second coordinate stays inside.
  next.theta = vec2(-1, 0.5) + vec2(0, 1);
  CHECK(certify_umd_step(h, seg, prev, xi, next, 1e-7).ok);
  // Exiting left of the DA point breaks condition (II)...
  next.theta = vec2(-1.5, 0.5);
  auto cert = certify_umd_step(h, seg, prev, xi, next, 1e-7);
  CHECK_FALSE(cert.ok);
  CHECK(cert.residual_II > 1e-7);
  // ... and exiting right of the projection pre-image breaks (I).
  next.theta = vec2(0.1, 0.5);
  cert = certify_umd_step(h, seg, prev, xi, next, 1e-7);
  CHECK_FALSE(cert.ok);
  CHECK(cert.residual_I > 1e-7);
}

TEST_CASE("gold branch choice") {
  const ConstraintSet ball = euclidean_ball(vec2(0, 0), 1.0);
  const Regularizer h = euclidean_regularizer(ball);

  SUBCASE("interior iterate: candidates coincide, tie goes to MD") {
    const UmdState s = state_from(h, vec2(0.1, 0.0));
    const Problem f = quadratic_to(vec2(2, 0));
    const GoldChoice choice = gold_branch_choice(f, h, ball, s, {0.5}, 1, 1);
    CHECK(choice.branch == Branch::MDChosen);
    CHECK(choice.theta == vec2(0.1, 0.0));
  }

  SUBCASE("re-anchoring wins") {
    // x_t = (-1, 0); the MD candidate steps straight toward the
    // optimum while the stale dual (-3, 0) lags behind.
    const UmdState s = state_from(h, vec2(-3, 0));
    const Problem f = quadratic_to(vec2(2, 0));
    const GoldChoice choice = gold_branch_choice(f, h, ball, s, {0.5}, 1, 1);
    CHECK(choice.branch == Branch::MDChosen);
    CHECK(choice.theta == s.x);
    // Explicit evaluation: f(proj(x_t - gamma grad)) = 1 vs 4.
    CHECK(f.value(grad_conjugate(h, Vector(s.x - 0.5 * f.grad(s.x)))) ==
          doctest::Approx(1.0));
    CHECK(f.value(grad_conjugate(h, Vector(s.theta - 0.5 * f.grad(s.x)))) ==
          doctest::Approx(4.0));
  }

  SUBCASE("lazy dual wins under a large step") {
    // The accumulated dual (50, 0) absorbs the overshoot of
    // gamma = 100 while re-anchoring slams to the opposite side.
    const UmdState s = state_from(h, vec2(50, 0));
    const Problem f = quadratic_to(vec2(0.9, 0));
    const GoldChoice choice = gold_branch_choice(f, h, ball, s, {100.0}, 1, 1);
    CHECK(choice.branch == Branch::DAChosen);
    CHECK(choice.theta == vec2(50, 0));
  }

  SUBCASE("lookahead rollout matches a manual DA rollout") {
    const UmdState s = state_from(h, vec2(-3, 0));
    const Problem f = quadratic_to(vec2(2, 0));
    const std::vector<double> window{0.3, 0.2, 0.1};
    const GoldChoice choice = gold_branch_choice(f, h, ball, s, window, 5, 3);
    const auto rollout = [&](Vector dual) {
      Vector x = s.x;
      for (double g : window) {
        dual -= g * f.grad(x);
        x = grad_conjugate(h, dual);
      }
      return f.value(x);
    };
    const double v_md = rollout(s.x);
    const double v_da = rollout(s.theta);
    CHECK(choice.branch ==
          (v_md <= v_da ? Branch::MDChosen : Branch::DAChosen));
  }
}

TEST_CASE("run_umd: zero objective freezes every policy") {
  const Regularizer h = euclidean_regularizer(euclidean_ball(vec2(0, 0), 1.0));
  const Problem f = make_zero(2);
  RunOptions options;
  options.certify = true;
  for (const DualPolicy& policy :
       {DualPolicy::da(), DualPolicy::md(), DualPolicy::gold(2),
        DualPolicy::gold_lookahead(3, 2)}) {
    const Trace trace = run_umd(f, h, h.domain, policy,
                                StepSchedule::constant(1.0), 12,
                                vec2(0.3, 0.1), options);
    REQUIRE(trace.size() == 12);
    for (size_t i = 0; i < trace.size(); ++i) {
      CHECK((trace.x[i] - trace.x[0]).norm() == 0.0);
    }
    CHECK((trace.last.x - trace.x[0]).norm() == 0.0);
  }
}

TEST_CASE("run_umd: 1-GoLD compares at every step") {
  Rng rng(42);
  const Regularizer h = euclidean_regularizer(euclidean_ball(vec2(0, 0), 1.0));
  const Problem f = quadratic_to(vec2(1.5, -0.5));
  RunOptions options;
  options.certify = true;
  const Trace trace =
      run_umd(f, h, h.domain, DualPolicy::gold(1), StepSchedule::constant(0.4),
              30, Vector::Zero(2), options);
  CHECK(trace.branch[0] == Branch::None);
  for (size_t i = 1; i < trace.size(); ++i) {
    const bool compared = trace.branch[i] == Branch::MDChosen ||
                          trace.branch[i] == Branch::DAChosen;
    CHECK(compared);
  }
}

TEST_CASE("run_umd: gold comparison steps fire at t = 2 mod k") {
  const Regularizer h = euclidean_regularizer(euclidean_ball(vec2(0, 0), 1.0));
  const Problem f = quadratic_to(vec2(1.5, -0.5));
  const Trace trace =
      run_umd(f, h, h.domain, DualPolicy::gold(5), StepSchedule::constant(0.4),
              23, Vector::Zero(2));
  for (size_t i = 0; i < trace.size(); ++i) {
    const int t = trace.t[i];
    const bool compared = trace.branch[i] == Branch::MDChosen ||
                          trace.branch[i] == Branch::DAChosen;
    CHECK(compared == (t >= 2 && (t - 2) % 5 == 0));
  }
}

TEST_CASE("run_umd: smooth descent at gamma = K/L") {
  Rng rng(43);
  const Eigen::Index n = 8;
  const Vector beta = 0.4 * rng.gaussian(n);
  const Dataset data = make_synthetic_regression(16, n, beta, 0.1, 5);
  const Problem f = make_least_squares(data);
  const ConstraintSet ball = euclidean_ball(Vector::Zero(n), 0.2);
  const Regularizer h = euclidean_regularizer(ball);
  const double L = *f.smoothness_L;
  RunOptions options;
  options.certify = true;
  for (const DualPolicy& policy : {DualPolicy::da(), DualPolicy::md()}) {
    const Trace trace = run_umd(f, h, ball, policy,
                                StepSchedule::constant(1.0 / L), 80,
                                Vector::Zero(n), options);
    for (size_t i = 0; i + 1 < trace.size(); ++i) {
      const double drop = trace.f_value[i + 1] - trace.f_value[i];
      const double move = (trace.x[i + 1] - trace.x[i]).squaredNorm();
      CHECK(drop <= -0.5 * L * move + 1e-7);
    }
  }
}

TEST_CASE("averaged_iterate") {
  Trace trace;
  trace.t = {1};
  trace.x = {vec2(0.3, 0.4)};
  CHECK(averaged_iterate(trace, StepSchedule::constant(2.0)) == vec2(0.3, 0.4));

  trace.t = {1, 2};
  trace.x = {vec2(0, 0), vec2(1, 0)};
  CHECK(averaged_iterate(trace, StepSchedule::constant(0.7)) == vec2(0.5, 0));
  CHECK(averaged_iterate(trace, StepSchedule::list({1.0, 3.0})) ==
        vec2(0.75, 0));
}

TEST_CASE("three-point inequalities along certified trajectories") {
  Rng rng(44);
  struct Case {
    Regularizer h;
    bool md_ok;
  };
  const std::vector<Case> cases = {
      {euclidean_regularizer(euclidean_ball(Vector::Zero(3), 1.0)), true},
      {entropy_simplex_regularizer(4), true},
      {elastic_net_regularizer(3), false},
  };
  for (const Case& c : cases) {
    std::vector<DualPolicy> policies{DualPolicy::da()};
    if (c.md_ok) {
      policies.push_back(DualPolicy::md());
    }
    for (const DualPolicy& policy : policies) {
      UmdState s = state_from(c.h, Vector::Zero(c.h.n));
      for (int t = 1; t <= 30; ++t) {
        const Vector xi = rng.gaussian(c.h.n, 0.7);
        const UmdState next = umd_step(c.h, c.h.domain, s, xi, policy);
        REQUIRE(certify_umd_step(c.h, c.h.domain, s, xi, next, 1e-7).ok);
        for (int rep = 0; rep < 20; ++rep) {
          const Vector x = rng.interior(c.h);
          const double d_from_s = generalized_bregman(c.h, x, s.x, s.theta);
          const double d_from_next =
              generalized_bregman(c.h, x, next.x, next.theta);
          const double d_step =
              generalized_bregman(c.h, next.x, s.x, s.theta);
          CHECK(xi.dot(x - next.x) <=
                d_from_s - d_from_next - d_step + 1e-7);
          // Regret form, with the conjugate divergence on the dual side.
          const double d_dual = conjugate_bregman(
              c.h, Vector(s.theta + xi), s.theta, s.x);
          CHECK(xi.dot(x - s.x) <= d_from_s - d_from_next + d_dual + 1e-7);
        }
        s = next;
      }
    }
  }
}

TEST_CASE("summed regret telescope") {
  Rng rng(45);
  const Regularizer h = entropy_simplex_regularizer(5);
  UmdState s = state_from(h, Vector::Zero(5));
  const UmdState first = s;
  std::vector<Vector> xis;
  std::vector<Vector> xs;
  const int T = 40;
  for (int t = 1; t <= T; ++t) {
    const Vector xi = rng.gaussian(5, 0.5);
    xs.push_back(s.x);
    xis.push_back(xi);
    s = umd_step(h, h.domain, s, xi, t % 2 == 0 ? DualPolicy::md()
                                                : DualPolicy::da());
  }
  for (int rep = 0; rep < 10; ++rep) {
    const Vector x = rng.interior(h);
    double lhs = 0.0;
    double quad = 0.0;
    for (int t = 0; t < T; ++t) {
      lhs += xis[static_cast<size_t>(t)].dot(x - xs[static_cast<size_t>(t)]);
      quad += std::pow(dual_norm(h.norm, xis[static_cast<size_t>(t)]), 2);
    }
    const double rhs = generalized_bregman(h, x, first.x, first.theta) -
                       generalized_bregman(h, x, s.x, s.theta) +
                       quad / (2.0 * h.strong_convexity_K);
    CHECK(lhs <= rhs + 1e-6);
  }
}

TEST_CASE("MD and DA coincide on the full space") {
  Rng rng(46);
  const Regularizer h = euclidean_regularizer(full_space(4));
  const Problem f = quadratic_to(rng.gaussian(4));
  const StepSchedule schedule = StepSchedule::constant(0.2);
  const Trace md = run_umd(f, h, h.domain, DualPolicy::md(), schedule, 40,
                           Vector::Zero(4));
  const Trace da = run_umd(f, h, h.domain, DualPolicy::da(), schedule, 40,
                           Vector::Zero(4));
  for (size_t i = 0; i < md.size(); ++i) {
    CHECK((md.x[i] - da.x[i]).lpNorm<Eigen::Infinity>() <= 1e-10);
    CHECK((md.theta[i] - da.theta[i]).lpNorm<Eigen::Infinity>() <= 1e-10);
  }
}

TEST_CASE("MD and DA primal traces coincide on the entropy simplex") {
  Rng rng(47);
  const Regularizer h = entropy_simplex_regularizer(5);
  Problem f;
  f.n = 5;
  f.name = "linear-ish";
  const Vector a = rng.gaussian(5);
  f.value = [a](const Vector& x) { return a.dot(x) + x.squaredNorm(); };
  f.grad = [a](const Vector& x) -> Vector { return a + 2.0 * x; };
  const StepSchedule schedule = StepSchedule::constant(0.5);
  const Trace md =
      run_umd(f, h, h.domain, DualPolicy::md(), schedule, 50, Vector::Zero(5));
  const Trace da =
      run_umd(f, h, h.domain, DualPolicy::da(), schedule, 50, Vector::Zero(5));
  for (size_t i = 0; i < md.size(); ++i) {
    CHECK((md.x[i] - da.x[i]).lpNorm<Eigen::Infinity>() <= 1e-8);
  }
}

TEST_CASE("quasi-monotone runner") {
  const Regularizer h = euclidean_regularizer(euclidean_ball(vec2(0, 0), 1.0));

  SUBCASE("zero objective freezes y") {
    const Trace trace = run_quasi_monotone(make_zero(2), h, h.domain,
                                           StepSchedule::constant(0.5), 10,
                                           vec2(0.2, -0.1));
    for (const Vector& y : trace.y) {
      CHECK((y - trace.x[0]).norm() <= 1e-15);
    }
  }

  SUBCASE("constant steps average the iterates") {
    const Problem f = quadratic_to(vec2(2, 1));
    const Trace trace = run_quasi_monotone(f, h, h.domain,
                                           StepSchedule::constant(0.3), 15,
                                           Vector::Zero(2));
    Vector mean = Vector::Zero(2);
    for (size_t i = 0; i < trace.size(); ++i) {
      mean = (mean * static_cast<double>(i) + trace.x[i]) /
             static_cast<double>(i + 1);
      CHECK((trace.y[i] - mean).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
  }

  SUBCASE("last-iterate bound on a nonsmooth objective") {
    Rng rng(48);
    const Eigen::Index n = 4;
    const ConstraintSet ball = euclidean_ball(Vector::Zero(n), 1.0);
    const Regularizer hb = euclidean_regularizer(ball);
    Vector c(n);
    c << 0.2, -0.1, 0.15, 0.05;  // optimum c lies inside the ball
    const Problem f = make_l1_distance(c);
    const double M = *f.subgrad_bound_M;
    const double K = hb.strong_convexity_K;
    const Vector theta1 = vec2(0.4, 0.4).replicate(2, 1);
    const Vector x1 = grad_conjugate(hb, theta1);
    const int T = 200;
    const double omega = std::sqrt(2.0 * estimate_omega(hb, ball, x1, theta1));
    const StepSchedule schedule =
        StepSchedule::lipschitz_optimal(omega, M, K, T);
    const Trace trace =
        run_quasi_monotone(f, hb, ball, schedule, T, theta1);
    const double d_star = generalized_bregman(hb, c, x1, theta1);
    const double g = schedule.gamma(1);
    const double bound =
        (d_star + M * M / (2.0 * K) * static_cast<double>(T) * g * g) /
        (static_cast<double>(T) * g);
    CHECK(f.value(trace.y.back()) - 0.0 <= bound + 1e-6);
  }
}

TEST_CASE("accelerated coefficients") {
  const AumdCoefficients c1 = aumd_coefficients(1.0, 1.0, 10);
  CHECK(c1.gammas[0] == doctest::Approx(1.0));
  CHECK(c1.gammas[1] == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));
  CHECK(c1.nus[0] == doctest::Approx(1.0));
  double sum = 0.0;
  for (int t = 0; t < 10; ++t) {
    sum += c1.gammas[static_cast<size_t>(t)];
    // gamma_t / nu_t = sum of gammas up to t.
    CHECK(c1.gammas[static_cast<size_t>(t)] /
              c1.nus[static_cast<size_t>(t)] ==
          doctest::Approx(sum).epsilon(1e-9));
    if (t >= 1) {
      CHECK(c1.nus[static_cast<size_t>(t)] > 0.0);
      CHECK(c1.nus[static_cast<size_t>(t)] < 1.0);
    }
  }
  CHECK(sum >= 100.0 / 4.0);

  const AumdCoefficients c2 = aumd_coefficients(2.0, 1.0, 3);
  CHECK(c2.gammas[0] == doctest::Approx(2.0));
  CHECK(c2.nus[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(aumd_coefficients(0.0, 1.0, 5), ArgumentError);
  CHECK_THROWS_AS(aumd_coefficients(1.0, -1.0, 5), ArgumentError);
}

TEST_CASE("accelerated runner") {
  const ConstraintSet ball = euclidean_ball(vec2(0, 0), 1.0);
  const Regularizer h = euclidean_regularizer(ball);

  SUBCASE("zero objective freezes everything") {
    const Trace trace =
        run_aumd(make_zero(2), h, ball, 1.0, 1.0, 10, vec2(0.3, 0.0));
    for (size_t i = 0; i < trace.size(); ++i) {
      CHECK((trace.x[i] - trace.x[0]).norm() == 0.0);
      CHECK((trace.y[i] - trace.x[0]).norm() <= 1e-15);
      CHECK((trace.z[i] - trace.x[0]).norm() <= 1e-15);
    }
  }

  SUBCASE("momentum identity and feasibility") {
    const Problem f = quadratic_to(vec2(2, 1));
    const double L = *f.smoothness_L;
    const Trace trace = run_aumd(f, h, ball, 1.0, L, 40, Vector::Zero(2));
    const AumdCoefficients coeff = aumd_coefficients(1.0, L, 40);
    for (size_t i = 0; i < trace.size(); ++i) {
      CHECK(contains(ball, trace.y[i], 1e-9));
      CHECK(contains(ball, trace.z[i], 1e-9));
      const double nu = coeff.nus[i];
      const Vector z_next = i + 1 < trace.size() ? trace.z[i + 1]
                                                 : trace.last_z;
      const Vector x_next = i + 1 < trace.size() ? trace.x[i + 1]
                                                 : trace.last.x;
      const Vector combo = (1.0 - nu) * trace.z[i] + nu * x_next;
      CHECK((z_next - combo).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
  }

  SUBCASE("quadratic rate") {
    Rng rng(49);
    const Eigen::Index n = 6;
    const Vector beta = rng.gaussian(n);
    const Dataset data = make_synthetic_regression(12, n, beta, 0.0, 9);
    const Problem f = make_least_squares(data);
    const ConstraintSet small = euclidean_ball(Vector::Zero(n), 0.3);
    const Regularizer hs = euclidean_regularizer(small);
    const double L = *f.smoothness_L;
    const int T = 60;
    const Trace trace = run_aumd(f, hs, small, 1.0, L, T, Vector::Zero(n));
    const FStarEstimate ref = estimate_f_star(f, small, 200000);
    const double d_star =
        generalized_bregman(hs, ref.argmin, trace.x[0], Vector::Zero(n));
    CHECK(f.value(trace.last_z) - ref.value <=
          4.0 * L * d_star / (1.0 * T * T) + 1e-6);
  }
}

TEST_CASE("schedules") {
  CHECK_THROWS_AS(StepSchedule::constant(0.0), ArgumentError);
  CHECK_THROWS_AS(StepSchedule::list({1.0, -2.0}), ArgumentError);
  const StepSchedule list = StepSchedule::list({0.5, 0.25});
  CHECK(list.gamma(2) == 0.25);
  CHECK_THROWS_AS(list.gamma(3), ArgumentError);
  // (Omega/M) sqrt(K/T)
  const StepSchedule opt = StepSchedule::lipschitz_optimal(2.0, 4.0, 1.0, 4);
  CHECK(opt.gamma(1) == doctest::Approx(0.25));
}

TEST_CASE("certification failure aborts a run") {
  // A policy-violating trajectory is simulated by corrupting the dual:
  // wrap the regularizer so its conjugate gradient disagrees with the
  // stored x.
  const ConstraintSet ball = euclidean_ball(vec2(0, 0), 1.0);
  const Regularizer h = euclidean_regularizer(ball);
  const UmdState prev = state_from(h, vec2(0, 0));
  const Vector xi = vec2(2.5, 0);
  UmdState corrupted;
  corrupted.t = 2;
  corrupted.x = vec2(1, 0);
  corrupted.theta = vec2(2.5, 1.0);
  CHECK_FALSE(certify_umd_step(h, ball, prev, xi, corrupted, 1e-7).ok);
}

TEST_CASE("run_umd rejects MD-style policies without a mirror side") {
  const Regularizer en = elastic_net_regularizer(3);
  const Problem f = make_zero(3);
  CHECK_THROWS_AS(run_umd(f, en, en.domain, DualPolicy::md(),
                          StepSchedule::constant(1.0), 5, Vector::Zero(3)),
                  UnsupportedError);
  CHECK_THROWS_AS(run_umd(f, en, en.domain, DualPolicy::gold(2),
                          StepSchedule::constant(1.0), 5, Vector::Zero(3)),
                  UnsupportedError);
  // DA works fine there.
  const Trace trace = run_umd(f, en, en.domain, DualPolicy::da(),
                              StepSchedule::constant(1.0), 5, Vector::Zero(3));
  CHECK(trace.size() == 5);
}
