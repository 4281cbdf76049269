#pragma once

// Shared helpers for the test suites: deterministic samplers over the
// built-in sets and small independent oracles (KL, finite differences,
// KKT solves) kept apart from the library code they check.

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "umd/geometry.hpp"
#include "umd/regularizer.hpp"
#include "umd/vector.hpp"

namespace umd::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  Vector gaussian(Eigen::Index n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = g(rng_);
    }
    return v;
  }

  /// Random feasible point, interior-biased.
  Vector feasible(const ConstraintSet& set) {
    switch (set.kind) {
      case SetKind::Simplex: {
        Vector v(set.n);
        for (Eigen::Index i = 0; i < set.n; ++i) {
          v(i) = -std::log(uniform(1e-12, 1.0));
        }
        return v / v.sum();
      }
      case SetKind::Product: {
        Vector v(set.n);
        v << feasible(set.parts[0]), feasible(set.parts[1]);
        return v;
      }
      default:
        return euclidean_project(set, set.center + gaussian(set.n, 1.0));
    }
  }

  /// Random point of dom h bounded away from the boundary where the
  /// subgradient exists.
  Vector interior(const Regularizer& h) {
    if (h.kind == RegKind::EntropySimplex) {
      Vector v(h.n);
      for (Eigen::Index i = 0; i < h.n; ++i) {
        v(i) = uniform(0.02, 1.0);
      }
      return v / v.sum();
    }
    if (h.kind == RegKind::Product) {
      // Interior-biased feasible point of the product domain.
      return feasible(h.domain);
    }
    return euclidean_project(h.domain, 0.7 * gaussian(h.n, 0.8));
  }

 private:
  std::mt19937_64 rng_;
};

/// KL divergence between simplex points, evaluated from its own closed
/// form (independent of the Bregman machinery).
inline double kl_divergence(const Vector& p, const Vector& q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) {
      s += p(i) * std::log(p(i) / q(i));
    }
  }
  return s;
}

/// Projection onto the simplex via the KKT water-filling conditions:
/// bisect tau so that sum max(y_i - tau, 0) = 1.
inline Vector simplex_project_kkt(const Vector& y) {
  double lo = y.minCoeff() - 1.0;
  double hi = y.maxCoeff();
  for (int it = 0; it < 200; ++it) {
    const double tau = 0.5 * (lo + hi);
    double total = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      total += std::max(y(i) - tau, 0.0);
    }
    (total > 1.0 ? lo : hi) = tau;
  }
  const double tau = 0.5 * (lo + hi);
  Vector x(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    x(i) = std::max(y(i) - tau, 0.0);
  }
  return x;
}

/// Minimizer of ||A x - b||^2 / m over the ball ||x|| <= r via the KKT
/// conditions: (A^T A + lambda I) x = A^T b with lambda bisected so
/// that the constraint holds.
inline Vector ball_quadratic_kkt(const Matrix& a, const Vector& b, double r) {
  const Matrix gram = a.transpose() * a;
  const Vector rhs = a.transpose() * b;
  const Vector unconstrained =
      gram.ldlt().solve(rhs);
  if (unconstrained.norm() <= r) {
    return unconstrained;
  }
  double lo = 0.0;
  double hi = 1.0;
  const Matrix eye = Matrix::Identity(a.cols(), a.cols());
  const auto radius_at = [&](double lambda) {
    return Vector((gram + lambda * eye).ldlt().solve(rhs)).norm();
  };
  while (radius_at(hi) > r) {
    hi *= 2.0;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (radius_at(mid) > r ? lo : hi) = mid;
  }
  return (gram + 0.5 * (lo + hi) * eye).ldlt().solve(rhs);
}

}  // namespace umd::testing
