#include "umd/vi.hpp"

#include <cmath>

namespace umd {

MonotoneOperator make_bilinear_saddle(const Matrix& payoff) {
  if (payoff.rows() < 1 || payoff.cols() < 1) {
    throw DimensionError("make_bilinear_saddle: empty payoff matrix");
  }
  const Matrix a = payoff;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  MonotoneOperator op;
  op.n = m + n;
  op.name = "bilinear_saddle(" + std::to_string(m) + "x" + std::to_string(n) +
            ")";
  op.apply = [a, m, n](const Vector& w) -> Vector {
    require_dim(w, m + n, "bilinear saddle operator");
    Vector out(m + n);
    out.head(m) = a * w.tail(n);
    out.tail(n) = -a.transpose() * w.head(m);
    return out;
  };
  op.lipschitz_L = a.cwiseAbs().maxCoeff();
  op.norm = NormTag::L1;
  return op;
}

UmpResult run_ump(const MonotoneOperator& op, const Regularizer& h,
                  const ConstraintSet& set, double gamma, int T,
                  const Vector& theta_1, ZetaPolicy zeta_policy,
                  ZetaPolicy theta_policy, double certify_tol) {
  if (T < 1) {
    throw ArgumentError("run_ump: T must be >= 1");
  }
  if (!(gamma > 0.0)) {
    throw ArgumentError("run_ump: gamma must be positive");
  }
  if (op.lipschitz_L && gamma > h.strong_convexity_K / *op.lipschitz_L * (1.0 + 1e-12)) {
    throw ArgumentError("run_ump: gamma exceeds K/L");
  }
  if ((zeta_policy == ZetaPolicy::MD || theta_policy == ZetaPolicy::MD) &&
      !h.mirror) {
    throw UnsupportedError("run_ump: MD anchor needs a mirror-map side");
  }
  require_dim(theta_1, h.n, "run_ump theta_1");

  Trace trace;
  Vector theta = theta_1;
  Vector x = grad_conjugate(h, theta);
  Vector y_sum = Vector::Zero(h.n);

  for (int t = 1; t <= T; ++t) {
    const Vector zeta =
        zeta_policy == ZetaPolicy::MD ? md_subgradient(h, x) : theta;

    // The anchor must be a subgradient at x_t satisfying the
    // variational condition relative to theta_t.
    const double fench = fenchel_residual(h, x, zeta);
    double var_res = 0.0;
    const Vector g = zeta - theta;
    if (g.norm() > 0.0) {
      var_res = g.dot(x) - support_min(set, g).value;
    }
    if (fench > certify_tol || var_res > certify_tol) {
      throw CertificationError(
          "ump anchor at t = " + std::to_string(t) +
          " violates conditions: fenchel = " + std::to_string(fench) +
          ", variational = " + std::to_string(var_res));
    }

    const Vector y = grad_conjugate(h, Vector(zeta - gamma * op.apply(x)));
    const Vector xi = -gamma * op.apply(y);

    trace.t.push_back(t);
    trace.x.push_back(x);
    trace.theta.push_back(theta);
    trace.xi.push_back(xi);
    trace.f_value.push_back(kNaN);
    trace.branch.push_back(theta_policy == ZetaPolicy::MD ? Branch::MDChosen
                                                          : Branch::DAStep);
    trace.res_I.push_back(fench);
    trace.res_II.push_back(var_res);
    trace.y.push_back(y);
    y_sum += y;

    const Vector dual = theta + xi;
    x = grad_conjugate(h, dual);
    theta = theta_policy == ZetaPolicy::MD ? md_subgradient(h, x) : dual;
  }

  trace.last.t = T + 1;
  trace.last.x = x;
  trace.last.theta = theta;

  UmpResult result;
  result.y_bar = y_sum / static_cast<double>(T);
  result.trace = std::move(trace);
  return result;
}

double vi_gap(const MonotoneOperator& op, const ConstraintSet& set,
              const Vector& y_bar, const std::vector<Vector>& probe_points) {
  require_dim(y_bar, op.n, "vi_gap y_bar");
  double gap = -kInf;
  for (const Vector& x : probe_points) {
    require_dim(x, op.n, "vi_gap probe");
    if (!contains(set, x, 1e-9)) {
      throw ArgumentError("vi_gap: probe point outside the feasible set");
    }
    gap = std::max(gap, op.apply(x).dot(Vector(y_bar - x)));
  }
  return gap;
}

}  // namespace umd
