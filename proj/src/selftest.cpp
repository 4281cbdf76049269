#include "umd/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "umd/bregman.hpp"
#include "umd/online.hpp"
#include "umd/solvers.hpp"
#include "umd/vi.hpp"

namespace umd {

namespace {

struct Workbench {
  std::mt19937_64 rng{0xc0ffeeULL};

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  Vector gaussian(Eigen::Index n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = g(rng);
    }
    return v;
  }

  // Random interior point of dom h.
  Vector interior_point(const Regularizer& h) {
    if (h.kind == RegKind::EntropySimplex) {
      Vector v(h.n);
      for (Eigen::Index i = 0; i < h.n; ++i) {
        v(i) = uniform(0.05, 1.0);
      }
      return v / v.sum();
    }
    Vector v = gaussian(h.n);
    return euclidean_project(h.domain, 0.8 * v);
  }
};

struct Instance {
  Regularizer h;
  ConstraintSet set;
  bool md_ok;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  {
    ConstraintSet ball = euclidean_ball(Vector::Zero(4), 1.0);
    out.push_back({euclidean_regularizer(ball), ball, true});
  }
  {
    ConstraintSet sx = simplex(5);
    out.push_back({entropy_simplex_regularizer(5), sx, true});
  }
  {
    ConstraintSet all = full_space(4);
    out.push_back({elastic_net_regularizer(4), all, false});
  }
  return out;
}

SelfTestCheck check_round_trip(Workbench& bench) {
  SelfTestCheck check{"conjugate-round-trip", true, ""};
  double worst = 0.0;
  for (const Instance& inst : instances()) {
    if (!inst.h.mirror) {
      continue;
    }
    for (int rep = 0; rep < 50; ++rep) {
      const Vector x = bench.interior_point(inst.h);
      const Vector back = grad_conjugate(inst.h, md_subgradient(inst.h, x));
      worst = std::max(worst, (back - x).lpNorm<Eigen::Infinity>());
    }
  }
  check.ok = worst <= 1e-10;
  check.detail = "max deviation " + std::to_string(worst);
  return check;
}

SelfTestCheck check_feasibility(Workbench& bench) {
  SelfTestCheck check{"conjugate-gradient-feasibility", true, ""};
  for (const Instance& inst : instances()) {
    for (int rep = 0; rep < 200; ++rep) {
      const double scale = std::pow(10.0, bench.uniform(-1.0, 6.0));
      const Vector x = grad_conjugate(inst.h, bench.gaussian(inst.h.n, scale));
      if (!contains(inst.set, x, 1e-9) || !is_finite(x)) {
        check.ok = false;
        check.detail = "infeasible conjugate gradient on " + inst.h.name;
        return check;
      }
    }
  }
  // Entropy must survive astronomically large duals.
  const Regularizer entropy = entropy_simplex_regularizer(6);
  Vector huge = bench.gaussian(6);
  huge *= 1e40 / huge.lpNorm<Eigen::Infinity>();
  const Vector x = grad_conjugate(entropy, huge);
  if (!is_finite(x) || !contains(entropy.domain, x, 1e-9)) {
    check.ok = false;
    check.detail = "entropy overflowed at 1e40";
  }
  return check;
}

SelfTestCheck check_three_point(Workbench& bench) {
  SelfTestCheck check{"three-point-inequality", true, ""};
  double worst = -kInf;
  for (const Instance& inst : instances()) {
    std::vector<DualPolicy> policies{DualPolicy::da()};
    if (inst.md_ok) {
      policies.push_back(DualPolicy::md());
    }
    for (const DualPolicy& policy : policies) {
      UmdState state;
      state.t = 1;
      state.theta = Vector::Zero(inst.h.n);
      state.x = grad_conjugate(inst.h, state.theta);
      for (int t = 1; t <= 25; ++t) {
        const Vector xi = bench.gaussian(inst.h.n, 0.5);
        const UmdState next = umd_step(inst.h, inst.set, state, xi, policy);
        for (int rep = 0; rep < 5; ++rep) {
          const Vector x = bench.interior_point(inst.h);
          const double lhs = xi.dot(x - next.x);
          const double rhs =
              generalized_bregman(inst.h, x, state.x, state.theta) -
              generalized_bregman(inst.h, x, next.x, next.theta) -
              generalized_bregman(inst.h, next.x, state.x, state.theta);
          worst = std::max(worst, lhs - rhs);
        }
        state = next;
      }
    }
  }
  check.ok = worst <= 1e-7;
  check.detail = "max violation " + std::to_string(worst);
  return check;
}

SelfTestCheck check_regret_telescope(Workbench& bench) {
  SelfTestCheck check{"summed-regret-bound", true, ""};
  double worst = -kInf;
  for (const Instance& inst : instances()) {
    const int T = 40;
    UmdState state;
    state.t = 1;
    state.theta = 0.1 * bench.gaussian(inst.h.n);
    state.x = grad_conjugate(inst.h, state.theta);
    const UmdState first = state;
    std::vector<Vector> xis;
    std::vector<Vector> xs;
    for (int t = 1; t <= T; ++t) {
      const Vector xi = bench.gaussian(inst.h.n, 0.3);
      xs.push_back(state.x);
      xis.push_back(xi);
      state = umd_step(inst.h, inst.set, state, xi, DualPolicy::da());
    }
    for (int rep = 0; rep < 5; ++rep) {
      const Vector x = bench.interior_point(inst.h);
      double lhs = 0.0;
      double quad = 0.0;
      for (int t = 0; t < T; ++t) {
        lhs += xis[static_cast<size_t>(t)].dot(x - xs[static_cast<size_t>(t)]);
        const double dn = dual_norm(inst.h.norm, xis[static_cast<size_t>(t)]);
        quad += dn * dn;
      }
      const double rhs =
          generalized_bregman(inst.h, x, first.x, first.theta) -
          generalized_bregman(inst.h, x, state.x, state.theta) +
          quad / (2.0 * inst.h.strong_convexity_K);
      worst = std::max(worst, lhs - rhs);
    }
  }
  check.ok = worst <= 1e-6;
  check.detail = "max violation " + std::to_string(worst);
  return check;
}

SelfTestCheck check_certification(Workbench& bench) {
  SelfTestCheck check{"step-certification", true, ""};
  const ConstraintSet ball = euclidean_ball(Vector::Zero(6), 1.0);
  const Regularizer h = euclidean_regularizer(ball);
  const Vector beta = 0.5 * bench.gaussian(6);
  Dataset data = make_synthetic_regression(12, 6, beta, 0.0, 7);
  const Problem f = make_least_squares(data);
  const double gamma = h.strong_convexity_K / *f.smoothness_L;
  RunOptions options;
  options.certify = true;
  try {
    for (const DualPolicy& policy :
         {DualPolicy::da(), DualPolicy::md(), DualPolicy::gold(1),
          DualPolicy::gold(5), DualPolicy::gold_lookahead(5, 2)}) {
      run_umd(f, h, ball, policy, StepSchedule::constant(gamma), 60,
              Vector::Zero(6), options);
    }
  } catch (const CertificationError& e) {
    check.ok = false;
    check.detail = e.what();
  }
  return check;
}

SelfTestCheck check_ump(Workbench&) {
  SelfTestCheck check{"extragradient-anchors", true, ""};
  Matrix pennies(2, 2);
  pennies << 1, -1, -1, 1;
  const MonotoneOperator op = make_bilinear_saddle(pennies);
  const Regularizer h =
      product(entropy_simplex_regularizer(2), entropy_simplex_regularizer(2));
  try {
    const UmpResult result = run_ump(op, h, h.domain, 1.0, 200,
                                     Vector::Zero(4), ZetaPolicy::MD);
    const double gap =
        vi_gap(op, h.domain, result.y_bar, probe_points(h.domain));
    if (gap > 0.05) {
      check.ok = false;
      check.detail = "equilibrium gap " + std::to_string(gap);
    }
  } catch (const Error& e) {
    check.ok = false;
    check.detail = e.what();
  }
  return check;
}

}  // namespace

bool SelfTestReport::all_ok() const {
  for (const SelfTestCheck& check : checks) {
    if (!check.ok) {
      return false;
    }
  }
  return true;
}

SelfTestReport run_selftest() {
  Workbench bench;
  SelfTestReport report;
  report.checks.push_back(check_round_trip(bench));
  report.checks.push_back(check_feasibility(bench));
  report.checks.push_back(check_three_point(bench));
  report.checks.push_back(check_regret_telescope(bench));
  report.checks.push_back(check_certification(bench));
  report.checks.push_back(check_ump(bench));
  return report;
}

}  // namespace umd
