#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umd/bregman.hpp"
#include "umd/geometry.hpp"
#include "umd/problems.hpp"
#include "umd/regularizer.hpp"

namespace umd {

/// One algorithm state: primal iterate x and dual iterate theta, with
/// x = grad h*(theta) holding by construction.
struct UmdState {
  int t = 1;
  Vector x;
  Vector theta;
};

/// How the dual iterate is chosen inside the prox-mapping.
///   DA keeps the unprojected dual; MD re-anchors it at grad F(x);
///   GoLD compares both candidates every k steps, optionally looking
///   tau steps ahead before deciding.
struct DualPolicy {
  enum class Kind { DA, MD, GoLD, GoLDLookahead };
  Kind kind = Kind::DA;
  int k = 1;
  int tau = 1;

  static DualPolicy da() { return {Kind::DA, 1, 1}; }
  static DualPolicy md() { return {Kind::MD, 1, 1}; }
  static DualPolicy gold(int k);
  static DualPolicy gold_lookahead(int k, int tau);

  bool is_gold() const {
    return kind == Kind::GoLD || kind == Kind::GoLDLookahead;
  }
  bool needs_mirror() const { return kind != Kind::DA; }
  /// Comparison steps fire at t = 2, 2+k, 2+2k, ...
  bool comparison_step(int t) const {
    return is_gold() && t >= 2 && (t - 2) % k == 0;
  }
  std::string name() const;
};

/// Step-size sequence. LipschitzOptimal is the constant
/// (Omega/M) sqrt(K/T) tuned for M-bounded subgradients.
struct StepSchedule {
  enum class Kind { Constant, List, LipschitzOptimal };
  Kind kind = Kind::Constant;
  double constant_gamma = 1.0;
  std::vector<double> gammas;

  static StepSchedule constant(double gamma);
  static StepSchedule list(std::vector<double> gammas);
  static StepSchedule lipschitz_optimal(double omega, double M, double K,
                                        int T);

  /// gamma_t, 1-indexed. Throws ArgumentError past the end of a list.
  double gamma(int t) const;
};

enum class Branch { None, DAStep, MDChosen, DAChosen };

std::string branch_name(Branch b);

/// Per-iteration record of a solve. Row t carries the iterate x_t, the
/// finalized dual theta_t, the increment xi_t applied at t, how theta_t
/// was chosen, and the certification residuals of the step that
/// produced x_t (NaN when certification was off). `last` is the state
/// after the final step (t = T+1).
struct Trace {
  std::vector<int> t;
  std::vector<Vector> x;
  std::vector<Vector> theta;
  std::vector<Vector> xi;
  std::vector<double> f_value;
  std::vector<Branch> branch;
  std::vector<double> res_I;
  std::vector<double> res_II;

  // Auxiliary sequences filled by the quasi-monotone / accelerated /
  // game runners; empty otherwise.
  std::vector<Vector> y;
  std::vector<Vector> z;
  std::vector<Vector> payoff;

  UmdState last;
  Vector last_y;
  Vector last_z;

  size_t size() const { return t.size(); }
};

struct CertifyResult {
  bool ok = false;
  double residual_I = 0.0;
  double residual_II = 0.0;
};

/// Checks the two trajectory conditions for the transition
/// prev -> next under increment xi:
///   residual_I  = ||next.x - grad h*(next.theta)||_2,
///   residual_II = <g, next.x> - min over X of <g, x>,
///                 g = next.theta - prev.theta - xi,
/// so the variational condition holds iff residual_II <= 0.
CertifyResult certify_umd_step(const Regularizer& h, const ConstraintSet& set,
                               const UmdState& prev, const Vector& xi,
                               const UmdState& next, double tol);

/// Policy-specific data for a single step; GoLD comparison steps pass
/// the dual they selected.
struct StepContext {
  std::optional<Vector> theta_override;
};

/// One prox-mapping application: x' = grad h*(theta + xi), with theta'
/// chosen by the policy (DA keeps theta + xi, MD re-anchors at
/// grad F(x'), GoLD policies use DA here; their comparison choice is
/// applied beforehand through context.theta_override).
UmdState umd_step(const Regularizer& h, const ConstraintSet& set,
                  const UmdState& state, const Vector& xi,
                  const DualPolicy& policy, const StepContext& context = {});

struct GoldChoice {
  Vector theta;
  Branch branch = Branch::MDChosen;
};

/// At a comparison step, evaluates f at the tau-step-ahead primal
/// points reached from the MD candidate grad F(x_t) and the DA
/// candidate (the incumbent dual), and returns the winner. Ties go to
/// MD.
GoldChoice gold_branch_choice(const Problem& f, const Regularizer& h,
                              const ConstraintSet& set, const UmdState& state,
                              const std::vector<double>& gamma_window, int k,
                              int tau);

struct RunOptions {
  bool certify = false;
  double certify_tol = 1e-7;
  bool record_f = true;
};

/// Runs T steps with dual increments xi_t = -gamma_t f'(x_t).
/// When certification is on, every step must pass certify_umd_step or
/// the run aborts with CertificationError.
Trace run_umd(const Problem& f, const Regularizer& h, const ConstraintSet& set,
              const DualPolicy& policy, const StepSchedule& schedule, int T,
              const Vector& theta_1, const RunOptions& options = {});

/// gamma-weighted average of the primal iterates of a trace.
Vector averaged_iterate(const Trace& trace, const StepSchedule& schedule);

/// Runs the last-iterate variant: subgradients are taken at the
/// auxiliary points y_t, and y_{t+1} = (1 - nu_t) y_t + nu_t x_{t+1}
/// with nu_t = gamma_{t+1} / sum_{s<=t+1} gamma_s.
Trace run_quasi_monotone(const Problem& f, const Regularizer& h,
                         const ConstraintSet& set,
                         const StepSchedule& schedule, int T,
                         const Vector& theta_1, const RunOptions& options = {});

struct AumdCoefficients {
  std::vector<double> gammas;
  std::vector<double> nus;
};

/// Accelerated schedule: gamma_1 = K/L,
/// gamma_{t+1} = (K/2L)(1 + sqrt(1 + (2 L gamma_t / K)^2)),
/// nu_t = K / (L gamma_t). nu_1 = 1 exactly; nu_t in (0,1) for t >= 2.
AumdCoefficients aumd_coefficients(double K, double L, int T);

/// Accelerated run for L-smooth objectives: gradients at y_t, DA dual
/// updates, and the momentum point z_{t+1} = y_t + nu_t (x_{t+1} - x_t).
/// The candidate output is trace.last_z.
Trace run_aumd(const Problem& f, const Regularizer& h,
               const ConstraintSet& set, double K, double L, int T,
               const Vector& theta_1, const RunOptions& options = {});

/// Upper estimate of max over X of D_h(x, x_1; theta_1) by probing
/// vertices (polytopes) or a deterministic boundary sample (balls).
double estimate_omega(const Regularizer& h, const ConstraintSet& set,
                      const Vector& x1, const Vector& theta_1);

}  // namespace umd
