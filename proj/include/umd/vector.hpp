#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <string>

#include "umd/errors.hpp"

namespace umd {

// Dense real vectors carry every primal and dual point in the library.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Reference norm of a regularizer or problem; L1 and LInf are dual to
/// each other, L2 is self-dual.
enum class NormTag { L1, L2, LInf };

inline NormTag dual_of(NormTag tag) {
  switch (tag) {
    case NormTag::L1:
      return NormTag::LInf;
    case NormTag::LInf:
      return NormTag::L1;
    case NormTag::L2:
      return NormTag::L2;
  }
  return NormTag::L2;
}

inline std::string norm_name(NormTag tag) {
  switch (tag) {
    case NormTag::L1:
      return "l1";
    case NormTag::L2:
      return "l2";
    case NormTag::LInf:
      return "linf";
  }
  return "?";
}

inline double norm_of(NormTag tag, const Vector& v) {
  switch (tag) {
    case NormTag::L1:
      return v.lpNorm<1>();
    case NormTag::L2:
      return v.norm();
    case NormTag::LInf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

/// Norm of v measured in the dual of `tag`.
inline double dual_norm(NormTag tag, const Vector& v) {
  return norm_of(dual_of(tag), v);
}

inline bool is_finite(const Vector& v) { return v.allFinite(); }

inline void require_finite(const Vector& v, const char* what) {
  if (!is_finite(v)) {
    throw ArgumentError(std::string(what) + ": vector has non-finite entries");
  }
}

inline void require_dim(const Vector& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(n) + ", got " +
                         std::to_string(v.size()));
  }
}

}  // namespace umd
