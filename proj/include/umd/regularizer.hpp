#pragma once

#include <functional>
#include <optional>
#include <string>

#include "umd/geometry.hpp"
#include "umd/vector.hpp"

namespace umd {

enum class RegKind { Euclidean, EntropySimplex, ElasticNet, Product };
enum class MirrorKind { Euclidean, Entropy, Product };

/// Differentiable part F of a regularizer h = F + I_X, when it exists.
/// Provides the mirror-descent coordinate change between primal and dual.
struct MirrorMapSide {
  MirrorKind kind = MirrorKind::Euclidean;
  Eigen::Index n = 0;
  /// F(x); +inf outside dom F.
  std::function<double(const Vector&)> value;
  /// grad F(x); throws DomainError outside the differentiability region.
  std::function<Vector(const Vector&)> grad;
  /// grad F*(zeta), the inverse coordinate change.
  std::function<Vector(const Vector&)> grad_conjugate;
  /// Component maps of a Product mirror; empty otherwise.
  std::vector<MirrorMapSide> parts;
};

/// Oracle bundle for an X-regularizer h: value (+inf outside dom h),
/// conjugate value, conjugate gradient, strong-convexity constant K with
/// its reference norm, and the optional mirror-map side.
struct Regularizer {
  RegKind kind = RegKind::Euclidean;
  Eigen::Index n = 0;
  std::string name;
  double strong_convexity_K = 1.0;
  NormTag norm = NormTag::L2;
  ConstraintSet domain;

  std::function<double(const Vector&)> value_fn;
  std::function<double(const Vector&)> conjugate_fn;
  std::function<Vector(const Vector&)> grad_conjugate_fn;
  std::optional<MirrorMapSide> mirror;
};

/// h = (1/2)||x||^2 + I_X over an arbitrary closed convex set; the
/// conjugate gradient is the Euclidean projection onto X. K = 1 wrt L2.
Regularizer euclidean_regularizer(const ConstraintSet& set);
/// Negative entropy over the n-simplex (0 log 0 = 0); the conjugate
/// gradient is the max-shifted softmax. K = 1 wrt L1.
Regularizer entropy_simplex_regularizer(Eigen::Index n);
/// h = ||x||_1 + ||x||_2^2 on the whole space; no mirror-map side.
/// K = 2 wrt L2.
Regularizer elastic_net_regularizer(Eigen::Index n);
/// Block sum h(u, v) = h_a(u) + h_b(v); K is the min of the block
/// constants.
Regularizer product(const Regularizer& a, const Regularizer& b);

/// h(x), +inf outside dom h.
double reg_value(const Regularizer& h, const Vector& x);
/// h*(zeta); finite everywhere by the regularizer property.
double reg_conjugate(const Regularizer& h, const Vector& zeta);
/// grad h*(zeta) = argmax <zeta,x> - h(x); lands in dom h.
Vector grad_conjugate(const Regularizer& h, const Vector& zeta);
/// The canonical subgradient grad F(x) of h at x; DomainError when x is
/// outside the differentiability region, UnsupportedError when h has no
/// mirror-map side.
Vector md_subgradient(const Regularizer& h, const Vector& x);

/// argmin over x in X of D_F(x, x0); DomainError if x0 is outside
/// int dom F.
Vector bregman_project(const MirrorMapSide& F, const ConstraintSet& set,
                       const Vector& x0);

/// |<theta, x> - h(x) - h*(theta)|, zero iff theta is a subgradient of h
/// at x.
double fenchel_residual(const Regularizer& h, const Vector& x,
                        const Vector& theta);

}  // namespace umd
