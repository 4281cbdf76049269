#include "umd/problems.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace umd {

namespace {

// log(1 + exp(t)) without overflow for large |t|.
double log1p_exp(double t) {
  if (t > 0.0) {
    return t + std::log1p(std::exp(-t));
  }
  return std::log1p(std::exp(t));
}

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

Matrix random_orthogonal(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = gauss(rng);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ();
}

}  // namespace

double lambda_max_gram(const Matrix& a) {
  const Eigen::Index n = a.cols();
  if (n == 0) {
    return 0.0;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = gauss(rng);
  }
  v.normalize();
  double lambda = 0.0;
  const int min_iters = static_cast<int>(10 * n);
  for (int it = 0; it < std::max(min_iters, 10000); ++it) {
    Vector w = a.transpose() * (a * v);
    const double wn = w.norm();
    if (wn == 0.0) {
      return 0.0;
    }
    const double next = v.dot(w);
    v = w / wn;
    if (it >= min_iters && std::abs(next - lambda) <= 1e-8 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda;
}

Problem make_least_squares(const Dataset& data) {
  if (data.features.rows() != data.targets.size()) {
    throw DimensionError("make_least_squares: row/target count mismatch");
  }
  if (data.features.rows() == 0) {
    throw DimensionError("make_least_squares: empty dataset");
  }
  const Matrix a = data.features;
  const Vector y = data.targets;
  const double inv_m = 1.0 / static_cast<double>(a.rows());
  Problem p;
  p.n = a.cols();
  p.name = "least_squares";
  p.value = [a, y, inv_m](const Vector& beta) {
    return inv_m * (a * beta - y).squaredNorm();
  };
  p.grad = [a, y, inv_m](const Vector& beta) -> Vector {
    return (2.0 * inv_m) * (a.transpose() * (a * beta - y));
  };
  p.smoothness_L = 2.0 * inv_m * lambda_max_gram(a);
  p.smoothness_norm = NormTag::L2;
  return p;
}

Problem make_logistic(const Dataset& data) {
  if (data.features.rows() != data.targets.size()) {
    throw DimensionError("make_logistic: row/target count mismatch");
  }
  if (data.features.rows() == 0) {
    throw DimensionError("make_logistic: empty dataset");
  }
  for (Eigen::Index i = 0; i < data.targets.size(); ++i) {
    if (data.targets(i) != 1.0 && data.targets(i) != -1.0) {
      throw LabelError("make_logistic: target at row " + std::to_string(i) +
                       " is not +-1");
    }
  }
  const Matrix a = data.features;
  const Vector y = data.targets;
  const double inv_m = 1.0 / static_cast<double>(a.rows());
  Problem p;
  p.n = a.cols();
  p.name = "logistic";
  p.value = [a, y, inv_m](const Vector& beta) {
    const Vector margins = y.asDiagonal() * (a * beta);
    double s = 0.0;
    for (Eigen::Index i = 0; i < margins.size(); ++i) {
      s += log1p_exp(-margins(i));
    }
    return inv_m * s;
  };
  p.grad = [a, y, inv_m](const Vector& beta) -> Vector {
    const Vector margins = y.asDiagonal() * (a * beta);
    Vector w(margins.size());
    for (Eigen::Index i = 0; i < margins.size(); ++i) {
      w(i) = -y(i) * sigmoid(-margins(i));
    }
    return inv_m * (a.transpose() * w);
  };
  p.smoothness_L = lambda_max_gram(a) * inv_m / 4.0;
  p.smoothness_norm = NormTag::L2;
  return p;
}

Problem make_l1_distance(Vector c) {
  Problem p;
  p.n = c.size();
  p.name = "l1_distance";
  p.value = [c](const Vector& x) { return (x - c).lpNorm<1>(); };
  p.grad = [c](const Vector& x) -> Vector {
    Vector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double d = x(i) - c(i);
      g(i) = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
    }
    return g;
  };
  p.subgrad_bound_M = std::sqrt(static_cast<double>(c.size()));
  p.bound_norm = NormTag::L2;
  return p;
}

Problem make_zero(Eigen::Index n) {
  Problem p;
  p.n = n;
  p.name = "zero";
  p.value = [](const Vector&) { return 0.0; };
  p.grad = [n](const Vector&) { return Vector::Zero(n); };
  p.smoothness_L = 0.0;
  p.subgrad_bound_M = 0.0;
  return p;
}

FStarEstimate estimate_f_star(const Problem& problem,
                              const ConstraintSet& set, int budget) {
  if (!problem.smoothness_L) {
    throw ArgumentError("estimate_f_star: problem has no smoothness constant");
  }
  if (budget < 0) {
    throw ArgumentError("estimate_f_star: negative budget");
  }
  const double L = *problem.smoothness_L;
  const double gamma = L > 0.0 ? 1.0 / L : 1.0;
  Vector x = euclidean_project(set, set.center);
  FStarEstimate best;
  best.value = problem.value(x);
  best.argmin = x;
  for (int it = 0; it < budget; ++it) {
    x = euclidean_project(set, x - gamma * problem.grad(x));
    const double fx = problem.value(x);
    if (fx < best.value) {
      best.value = fx;
      best.argmin = x;
    }
  }
  return best;
}

double check_gradient(const Problem& problem, const Vector& x, double h_fd) {
  if (!(h_fd > 0.0)) {
    throw ArgumentError("check_gradient: h_fd must be positive");
  }
  const Vector g = problem.grad(x);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector hi = x;
    Vector lo = x;
    hi(i) += h_fd;
    lo(i) -= h_fd;
    const double fd = (problem.value(hi) - problem.value(lo)) / (2.0 * h_fd);
    const double scale = std::max({1.0, std::abs(g(i)), std::abs(fd)});
    worst = std::max(worst, std::abs(g(i) - fd) / scale);
  }
  return worst;
}

Dataset make_synthetic_regression(Eigen::Index samples, Eigen::Index features,
                                  const Vector& beta_true, double noise,
                                  std::uint64_t seed) {
  require_dim(beta_true, features, "make_synthetic_regression beta");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset data;
  data.features.resize(samples, features);
  for (Eigen::Index i = 0; i < samples; ++i) {
    for (Eigen::Index j = 0; j < features; ++j) {
      data.features(i, j) = gauss(rng);
    }
  }
  data.targets = data.features * beta_true;
  if (noise > 0.0) {
    for (Eigen::Index i = 0; i < samples; ++i) {
      data.targets(i) += noise * gauss(rng);
    }
  }
  return data;
}

Dataset make_conditioned_regression(Eigen::Index n, const Vector& beta_true,
                                    double lambda_min, double lambda_max,
                                    std::uint64_t seed) {
  require_dim(beta_true, n, "make_conditioned_regression beta");
  if (!(0.0 < lambda_min && lambda_min <= lambda_max)) {
    throw ArgumentError("make_conditioned_regression: bad eigenvalue range");
  }
  std::mt19937_64 rng(seed);
  const Matrix q = random_orthogonal(n, rng);
  Vector eigs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t =
        n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    eigs(i) = lambda_min + t * (lambda_max - lambda_min);
  }
  Dataset data;
  data.features = eigs.cwiseSqrt().asDiagonal() * q.transpose();
  data.targets = data.features * beta_true;
  return data;
}

}  // namespace umd
