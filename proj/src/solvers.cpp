#include "umd/solvers.hpp"

#include <cmath>

namespace umd {

DualPolicy DualPolicy::gold(int k) {
  if (k < 1) {
    throw ArgumentError("gold: k must be >= 1");
  }
  return {Kind::GoLD, k, 1};
}

DualPolicy DualPolicy::gold_lookahead(int k, int tau) {
  if (tau < 1 || tau >= k) {
    throw ArgumentError("gold_lookahead: requires 1 <= tau < k");
  }
  return {Kind::GoLDLookahead, k, tau};
}

std::string DualPolicy::name() const {
  switch (kind) {
    case Kind::DA:
      return "da";
    case Kind::MD:
      return "md";
    case Kind::GoLD:
      return "gold" + std::to_string(k);
    case Kind::GoLDLookahead:
      return "gold" + std::to_string(k) + "-" + std::to_string(tau);
  }
  return "?";
}

StepSchedule StepSchedule::constant(double gamma) {
  if (!(gamma > 0.0)) {
    throw ArgumentError("StepSchedule: step-size must be positive");
  }
  StepSchedule s;
  s.kind = Kind::Constant;
  s.constant_gamma = gamma;
  return s;
}

StepSchedule StepSchedule::list(std::vector<double> gammas) {
  for (double g : gammas) {
    if (!(g > 0.0)) {
      throw ArgumentError("StepSchedule: step-sizes must be positive");
    }
  }
  StepSchedule s;
  s.kind = Kind::List;
  s.gammas = std::move(gammas);
  return s;
}

StepSchedule StepSchedule::lipschitz_optimal(double omega, double M, double K,
                                             int T) {
  if (!(omega > 0.0 && M > 0.0 && K > 0.0) || T < 1) {
    throw ArgumentError("StepSchedule: lipschitz_optimal needs positive "
                        "omega, M, K and T >= 1");
  }
  StepSchedule s;
  s.kind = Kind::LipschitzOptimal;
  s.constant_gamma = (omega / M) * std::sqrt(K / static_cast<double>(T));
  return s;
}

double StepSchedule::gamma(int t) const {
  if (t < 1) {
    throw ArgumentError("StepSchedule: t must be >= 1");
  }
  if (kind == Kind::List) {
    if (static_cast<size_t>(t) > gammas.size()) {
      throw ArgumentError("StepSchedule: list exhausted at t = " +
                          std::to_string(t));
    }
    return gammas[static_cast<size_t>(t - 1)];
  }
  return constant_gamma;
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::None:
      return "none";
    case Branch::DAStep:
      return "da-step";
    case Branch::MDChosen:
      return "md-chosen";
    case Branch::DAChosen:
      return "da-chosen";
  }
  return "?";
}

CertifyResult certify_umd_step(const Regularizer& h, const ConstraintSet& set,
                               const UmdState& prev, const Vector& xi,
                               const UmdState& next, double tol) {
  require_dim(xi, h.n, "certify_umd_step");
  CertifyResult result;
  result.residual_I = (next.x - grad_conjugate(h, next.theta)).norm();
  // Associate as theta + xi first: a dual-averaging step then cancels
  // exactly instead of leaving rounding dust.
  const Vector g = next.theta - (prev.theta + xi).eval();
  if (g.norm() == 0.0) {
    // A pure dual-averaging step: the variational condition is vacuous.
    result.residual_II = 0.0;
  } else {
    result.residual_II = g.dot(next.x) - support_min(set, g).value;
  }
  result.ok = result.residual_I <= tol && result.residual_II <= tol;
  return result;
}

UmdState umd_step(const Regularizer& h, const ConstraintSet& set,
                  const UmdState& state, const Vector& xi,
                  const DualPolicy& policy, const StepContext& context) {
  (void)set;
  require_dim(xi, h.n, "umd_step increment");
  require_finite(xi, "umd_step increment");
  const Vector& theta =
      context.theta_override ? *context.theta_override : state.theta;
  const Vector zeta = theta + xi;
  UmdState next;
  next.t = state.t + 1;
  next.x = grad_conjugate(h, zeta);
  if (policy.kind == DualPolicy::Kind::MD) {
    next.theta = md_subgradient(h, next.x);
  } else {
    next.theta = zeta;
  }
  return next;
}

GoldChoice gold_branch_choice(const Problem& f, const Regularizer& h,
                              const ConstraintSet& set, const UmdState& state,
                              const std::vector<double>& gamma_window, int k,
                              int tau) {
  (void)set;
  (void)k;
  if (tau < 1 || gamma_window.size() < static_cast<size_t>(tau)) {
    throw ArgumentError("gold_branch_choice: needs tau >= 1 step-sizes");
  }
  const Vector theta_md = md_subgradient(h, state.x);
  const Vector& theta_da = state.theta;

  // Tau dual-averaging steps ahead from a candidate dual, then the
  // objective value at the point reached.
  const auto rollout = [&](const Vector& theta_candidate) -> double {
    Vector dual = theta_candidate;
    Vector x = state.x;
    for (int s = 0; s < tau; ++s) {
      dual -= gamma_window[static_cast<size_t>(s)] * f.grad(x);
      x = grad_conjugate(h, dual);
    }
    return f.value(x);
  };

  const double value_md = rollout(theta_md);
  const double value_da = rollout(theta_da);
  if (value_md <= value_da) {
    return {theta_md, Branch::MDChosen};
  }
  return {theta_da, Branch::DAChosen};
}

namespace {

void append_row(Trace& trace, int t, const UmdState& state, const Vector& xi,
                double f_value, Branch branch, double res_I, double res_II) {
  trace.t.push_back(t);
  trace.x.push_back(state.x);
  trace.theta.push_back(state.theta);
  trace.xi.push_back(xi);
  trace.f_value.push_back(f_value);
  trace.branch.push_back(branch);
  trace.res_I.push_back(res_I);
  trace.res_II.push_back(res_II);
}

void certify_or_throw(const Regularizer& h, const ConstraintSet& set,
                      const UmdState& prev, const Vector& xi,
                      const UmdState& next, const RunOptions& options,
                      double& res_I, double& res_II) {
  if (!options.certify) {
    res_I = kNaN;
    res_II = kNaN;
    return;
  }
  const CertifyResult cert =
      certify_umd_step(h, set, prev, xi, next, options.certify_tol);
  res_I = cert.residual_I;
  res_II = cert.residual_II;
  if (!cert.ok) {
    throw CertificationError(
        "step to t = " + std::to_string(next.t) +
        " violates trajectory conditions: residual_I = " +
        std::to_string(cert.residual_I) +
        ", residual_II = " + std::to_string(cert.residual_II));
  }
}

}  // namespace

Trace run_umd(const Problem& f, const Regularizer& h, const ConstraintSet& set,
              const DualPolicy& policy, const StepSchedule& schedule, int T,
              const Vector& theta_1, const RunOptions& options) {
  if (T < 1) {
    throw ArgumentError("run_umd: T must be >= 1");
  }
  if (policy.needs_mirror() && !h.mirror) {
    throw UnsupportedError("run_umd: policy " + policy.name() +
                           " needs a mirror-map side, " + h.name +
                           " has none");
  }
  require_dim(theta_1, h.n, "run_umd theta_1");

  Trace trace;
  UmdState state;
  state.t = 1;
  state.theta = theta_1;
  state.x = grad_conjugate(h, theta_1);

  UmdState prev;
  Vector prev_xi;

  for (int t = 1; t <= T; ++t) {
    Branch branch = Branch::None;
    if (t >= 2) {
      if (policy.comparison_step(t)) {
        std::vector<double> window(static_cast<size_t>(policy.tau));
        for (int s = 0; s < policy.tau; ++s) {
          window[static_cast<size_t>(s)] = schedule.gamma(t + s);
        }
        GoldChoice choice =
            gold_branch_choice(f, h, set, state, window, policy.k, policy.tau);
        state.theta = std::move(choice.theta);
        branch = choice.branch;
      } else if (policy.kind == DualPolicy::Kind::MD) {
        branch = Branch::MDChosen;
      } else {
        branch = Branch::DAStep;
      }
    }

    // Certify the transition that produced x_t only now: a comparison
    // step may have re-anchored theta_t just above.
    double res_I = kNaN;
    double res_II = kNaN;
    if (t >= 2) {
      certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
    }

    const Vector xi = -schedule.gamma(t) * f.grad(state.x);
    const double fx = options.record_f ? f.value(state.x) : kNaN;
    append_row(trace, t, state, xi, fx, branch, res_I, res_II);

    prev = state;
    prev_xi = xi;
    state = umd_step(h, set, state, xi, policy);
  }

  double res_I = kNaN;
  double res_II = kNaN;
  certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
  trace.last = state;
  return trace;
}

Vector averaged_iterate(const Trace& trace, const StepSchedule& schedule) {
  if (trace.size() == 0) {
    throw ArgumentError("averaged_iterate: empty trace");
  }
  Vector sum = Vector::Zero(trace.x.front().size());
  double total = 0.0;
  for (size_t i = 0; i < trace.size(); ++i) {
    const double g = schedule.gamma(trace.t[i]);
    sum += g * trace.x[i];
    total += g;
  }
  return sum / total;
}

Trace run_quasi_monotone(const Problem& f, const Regularizer& h,
                         const ConstraintSet& set,
                         const StepSchedule& schedule, int T,
                         const Vector& theta_1, const RunOptions& options) {
  if (T < 1) {
    throw ArgumentError("run_quasi_monotone: T must be >= 1");
  }
  require_dim(theta_1, h.n, "run_quasi_monotone theta_1");

  Trace trace;
  UmdState state;
  state.t = 1;
  state.theta = theta_1;
  state.x = grad_conjugate(h, theta_1);
  Vector y = state.x;

  UmdState prev;
  Vector prev_xi;
  double gamma_sum = 0.0;

  for (int t = 1; t <= T; ++t) {
    double res_I = kNaN;
    double res_II = kNaN;
    if (t >= 2) {
      certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
    }
    const Vector xi = -schedule.gamma(t) * f.grad(y);
    const double fx = options.record_f ? f.value(state.x) : kNaN;
    append_row(trace, t, state, xi, fx,
               t == 1 ? Branch::None : Branch::DAStep, res_I, res_II);
    trace.y.push_back(y);

    gamma_sum += schedule.gamma(t);
    prev = state;
    prev_xi = xi;
    state = umd_step(h, set, state, xi, DualPolicy::da());
    const double nu = schedule.gamma(t + 1) / (gamma_sum + schedule.gamma(t + 1));
    y = (1.0 - nu) * y + nu * state.x;
  }

  double res_I = kNaN;
  double res_II = kNaN;
  certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
  trace.last = state;
  trace.last_y = y;
  return trace;
}

AumdCoefficients aumd_coefficients(double K, double L, int T) {
  if (!(K > 0.0) || !(L > 0.0)) {
    throw ArgumentError("aumd_coefficients: K and L must be positive");
  }
  if (T < 1) {
    throw ArgumentError("aumd_coefficients: T must be >= 1");
  }
  AumdCoefficients c;
  c.gammas.resize(static_cast<size_t>(T));
  c.nus.resize(static_cast<size_t>(T));
  double gamma = K / L;
  for (int t = 0; t < T; ++t) {
    c.gammas[static_cast<size_t>(t)] = gamma;
    c.nus[static_cast<size_t>(t)] = K / (L * gamma);
    const double r = 2.0 * L * gamma / K;
    gamma = (K / (2.0 * L)) * (1.0 + std::sqrt(1.0 + r * r));
  }
  return c;
}

Trace run_aumd(const Problem& f, const Regularizer& h,
               const ConstraintSet& set, double K, double L, int T,
               const Vector& theta_1, const RunOptions& options) {
  const AumdCoefficients coeff = aumd_coefficients(K, L, T);
  require_dim(theta_1, h.n, "run_aumd theta_1");

  Trace trace;
  UmdState state;
  state.t = 1;
  state.theta = theta_1;
  state.x = grad_conjugate(h, theta_1);
  Vector z = state.x;

  UmdState prev;
  Vector prev_xi;

  for (int t = 1; t <= T; ++t) {
    const double nu = coeff.nus[static_cast<size_t>(t - 1)];
    const double gamma = coeff.gammas[static_cast<size_t>(t - 1)];
    const Vector y = (1.0 - nu) * z + nu * state.x;

    double res_I = kNaN;
    double res_II = kNaN;
    if (t >= 2) {
      certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
    }
    const Vector xi = -gamma * f.grad(y);
    const double fx = options.record_f ? f.value(state.x) : kNaN;
    append_row(trace, t, state, xi, fx,
               t == 1 ? Branch::None : Branch::DAStep, res_I, res_II);
    trace.y.push_back(y);
    trace.z.push_back(z);

    prev = state;
    prev_xi = xi;
    UmdState next = umd_step(h, set, state, xi, DualPolicy::da());
    z = y + nu * (next.x - state.x);
    state = next;
  }

  double res_I = kNaN;
  double res_II = kNaN;
  certify_or_throw(h, set, prev, prev_xi, state, options, res_I, res_II);
  trace.last = state;
  trace.last_z = z;
  return trace;
}

double estimate_omega(const Regularizer& h, const ConstraintSet& set,
                      const Vector& x1, const Vector& theta_1) {
  std::vector<Vector> probes = probe_points(set);
  if (h.kind == RegKind::Euclidean && set.kind == SetKind::EuclideanBall) {
    // The divergence is an explicit quadratic here; its maximizer over
    // the ball lies on the boundary along center - theta_1.
    Vector g = theta_1 - set.center;
    if (g.norm() == 0.0) {
      g = Vector::Zero(set.n);
      g(0) = 1.0;
    }
    probes.push_back(support_min(set, g).witness);
  }
  double omega = 0.0;
  for (const Vector& p : probes) {
    const double value = reg_value(h, p);
    if (!std::isfinite(value)) {
      continue;
    }
    omega = std::max(omega, value - reg_value(h, x1) -
                                theta_1.dot(Vector(p - x1)));
  }
  return omega;
}

}  // namespace umd
