#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umd/vector.hpp"

namespace umd {

enum class SetKind { FullSpace, EuclideanBall, Simplex, Box, Segment2D, Product };

struct SupportResult {
  double value = 0.0;
  Vector witness;
};

/// Oracle bundle for a closed convex nonempty set X: membership,
/// Euclidean projection and an exact linear-minimization oracle.
/// Instances are immutable; all oracles are pure and reentrant.
struct ConstraintSet {
  SetKind kind = SetKind::FullSpace;
  Eigen::Index n = 0;
  std::string name;
  bool compact = false;

  std::function<SupportResult(const Vector&)> support_min_fn;
  std::function<Vector(const Vector&)> project_fn;
  // Extreme points when the set is a polytope; empty otherwise.
  std::function<std::vector<Vector>()> vertices_fn;
  // Canonical interior-ish point (center, barycenter, midpoint).
  Vector center;
  // Component sets of a Product; empty otherwise.
  std::vector<ConstraintSet> parts;
};

ConstraintSet full_space(Eigen::Index n);
ConstraintSet euclidean_ball(Vector center, double radius);
ConstraintSet simplex(Eigen::Index n);
ConstraintSet box(Vector lower, Vector upper);
ConstraintSet segment_2d(Vector a, Vector b);
/// Cartesian product by coordinate concatenation.
ConstraintSet product(const ConstraintSet& a, const ConstraintSet& b);

/// min over x in X of <g, x> together with a point attaining it.
/// Throws UnboundedError on FullSpace unless g = 0.
SupportResult support_min(const ConstraintSet& set, const Vector& g);

/// argmin over x in X of ||x - y||_2.
Vector euclidean_project(const ConstraintSet& set, const Vector& y);

/// True iff x lies within Euclidean distance tol of X.
bool contains(const ConstraintSet& set, const Vector& x, double tol);

/// Deterministic probe points: all vertices for polytopes, center plus
/// a fixed-seed boundary sample for balls. Used to estimate maxima of
/// divergences over the set.
std::vector<Vector> probe_points(const ConstraintSet& set, int budget = 64);

}  // namespace umd
