#pragma once

#include "umd/regularizer.hpp"

namespace umd {

/// Bregman divergence from x_from to x_to measured with a chosen
/// subgradient of h at x_from:
///
///   D_h(x_to, x_from; subgrad) = h(x_to) - h(x_from)
///                                - <subgrad, x_to - x_from>.
///
/// Nonnegative whenever subgrad is a subgradient of h at x_from (the
/// caller's responsibility; certify via fenchel_residual). Throws
/// DomainError when either point lies outside dom h.
inline double generalized_bregman(const Regularizer& h, const Vector& x_to,
                                  const Vector& x_from,
                                  const Vector& subgrad) {
  const double to_value = reg_value(h, x_to);
  const double from_value = reg_value(h, x_from);
  if (!std::isfinite(to_value) || !std::isfinite(from_value)) {
    throw DomainError("generalized_bregman: point outside dom h");
  }
  return to_value - from_value - subgrad.dot(x_to - x_from);
}

/// Divergence between dual points measured through h*; equals
/// D_h(x', x; theta) when theta' is a subgradient at x' (conjugate
/// symmetry). x_prime plays the role of grad h*(theta_prime).
inline double conjugate_bregman(const Regularizer& h, const Vector& theta_to,
                                const Vector& theta_from,
                                const Vector& x_prime) {
  return reg_conjugate(h, theta_to) - reg_conjugate(h, theta_from) -
         x_prime.dot(theta_to - theta_from);
}

}  // namespace umd
