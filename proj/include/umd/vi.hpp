#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umd/regularizer.hpp"
#include "umd/solvers.hpp"

namespace umd {

/// Evaluation oracle for a monotone operator Phi on X, with its
/// Lipschitz constant when known.
struct MonotoneOperator {
  Eigen::Index n = 0;
  std::string name;
  std::function<Vector(const Vector&)> apply;
  std::optional<double> lipschitz_L;
  NormTag norm = NormTag::L2;
};

/// Phi(u, v) = (A v, -A^T u) on simplex(m) x simplex(n): the saddle
/// operator of the zero-sum game with payoff matrix A. Monotone by
/// antisymmetry; L = max |A_ij| wrt the product norm.
MonotoneOperator make_bilinear_saddle(const Matrix& payoff);

enum class ZetaPolicy { MD, DA };

struct UmpResult {
  Trace trace;
  Vector y_bar;
};

/// Extragradient scheme: per step, an anchor zeta_t (MD: grad F(x_t),
/// DA: theta_t), a leading point y_t = grad h*(zeta_t - gamma Phi(x_t)),
/// and a prox step from theta_t - gamma Phi(y_t). theta_policy picks the
/// dual inside the prox-mapping (DA is always admissible; MD needs a
/// mirror-map side). The trace's y column holds the y_t whose average
/// y_bar carries the guarantee.
UmpResult run_ump(const MonotoneOperator& op, const Regularizer& h,
                  const ConstraintSet& set, double gamma, int T,
                  const Vector& theta_1, ZetaPolicy zeta_policy,
                  ZetaPolicy theta_policy = ZetaPolicy::DA,
                  double certify_tol = 1e-7);

/// max over the probe points of <Phi(x), y_bar - x>. Exact over X for
/// bilinear saddles probed at all pure-strategy vertices.
double vi_gap(const MonotoneOperator& op, const ConstraintSet& set,
              const Vector& y_bar, const std::vector<Vector>& probe_points);

}  // namespace umd
