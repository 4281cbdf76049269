#pragma once

#include <functional>
#include <optional>
#include <string>

#include "umd/geometry.hpp"
#include "umd/vector.hpp"

namespace umd {

/// First-order oracle: value and one deterministic (sub)gradient,
/// plus the smoothness / subgradient-bound constants when known.
struct Problem {
  Eigen::Index n = 0;
  std::string name;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> grad;
  std::optional<double> smoothness_L;
  NormTag smoothness_norm = NormTag::L2;
  std::optional<double> subgrad_bound_M;
  NormTag bound_norm = NormTag::L2;
};

/// Rows of a design matrix with real regression targets or +-1 labels.
struct Dataset {
  Matrix features;  // n_samples x n_features
  Vector targets;   // n_samples

  Eigen::Index samples() const { return features.rows(); }
  Eigen::Index dim() const { return features.cols(); }
};

/// f(beta) = (1/n) sum (y_i - <beta, x_i>)^2, with L = (2/n) lmax(A^T A).
Problem make_least_squares(const Dataset& data);

/// f(beta) = (1/n) sum log(1 + exp(-y_i <beta, x_i>)), overflow safe;
/// L = lmax(A^T A) / (4n). Targets must be +-1.
Problem make_logistic(const Dataset& data);

/// f(x) = ||x - c||_1 with the sign subgradient (0 at exact zeros);
/// M = sqrt(n) wrt L2.
Problem make_l1_distance(Vector c);

/// f identically zero.
Problem make_zero(Eigen::Index n);

/// Largest eigenvalue of A^T A by power iteration (fixed-seed start,
/// at least 10n iterations, relative tolerance 1e-8).
double lambda_max_gram(const Matrix& a);

struct FStarEstimate {
  double value = kInf;
  Vector argmin;
};

/// Reference optimum by `budget` projected-gradient steps with step
/// 1/L from the set's center; returns the best value seen (an upper
/// estimate of f*, monotone in budget). Requires a known L.
FStarEstimate estimate_f_star(const Problem& problem,
                              const ConstraintSet& set, int budget);

/// Max relative error between problem.grad and central finite
/// differences at x.
double check_gradient(const Problem& problem, const Vector& x, double h_fd);

/// Synthetic regression data y = A beta_true (+ noise), fixed seed.
Dataset make_synthetic_regression(Eigen::Index samples, Eigen::Index features,
                                  const Vector& beta_true, double noise,
                                  std::uint64_t seed);

/// Least squares whose Gram matrix has eigenvalues spread over
/// [lambda_min, lambda_max]; conditioning is exact by construction.
Dataset make_conditioned_regression(Eigen::Index n, const Vector& beta_true,
                                    double lambda_min, double lambda_max,
                                    std::uint64_t seed);

}  // namespace umd
