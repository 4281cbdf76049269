#include "umd/regularizer.hpp"

#include <algorithm>
#include <cmath>

namespace umd {

namespace {

// Slack for membership tests of dom h; iterates produced by the library
// are feasible to machine precision.
constexpr double kDomainTol = 1e-9;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double log_sum_exp(const Vector& z) {
  const double m = z.maxCoeff();
  double s = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    s += std::exp(z(i) - m);
  }
  return m + std::log(s);
}

Vector softmax(const Vector& z) {
  const double m = z.maxCoeff();
  Vector e(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    e(i) = std::exp(z(i) - m);
  }
  return e / e.sum();
}

}  // namespace

Regularizer euclidean_regularizer(const ConstraintSet& set) {
  Regularizer h;
  h.kind = RegKind::Euclidean;
  h.n = set.n;
  h.name = "euclidean+" + set.name;
  h.strong_convexity_K = 1.0;
  h.norm = NormTag::L2;
  h.domain = set;
  h.value_fn = [set](const Vector& x) -> double {
    if (!contains(set, x, kDomainTol)) {
      return kInf;
    }
    return 0.5 * x.squaredNorm();
  };
  // max over X of <z,x> - ||x||^2/2 is attained at the projection of z.
  h.conjugate_fn = [set](const Vector& z) -> double {
    Vector p = euclidean_project(set, z);
    return z.dot(p) - 0.5 * p.squaredNorm();
  };
  h.grad_conjugate_fn = [set](const Vector& z) {
    return euclidean_project(set, z);
  };

  MirrorMapSide F;
  F.kind = MirrorKind::Euclidean;
  F.n = set.n;
  F.value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  F.grad = [](const Vector& x) { return x; };
  F.grad_conjugate = [](const Vector& z) { return z; };
  h.mirror = std::move(F);
  return h;
}

Regularizer entropy_simplex_regularizer(Eigen::Index n) {
  const ConstraintSet set = simplex(n);
  Regularizer h;
  h.kind = RegKind::EntropySimplex;
  h.n = n;
  h.name = "entropy+" + set.name;
  h.strong_convexity_K = 1.0;  // Pinsker, wrt L1
  h.norm = NormTag::L1;
  h.domain = set;
  h.value_fn = [set, n](const Vector& x) -> double {
    if (!contains(set, x, kDomainTol)) {
      return kInf;
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      s += xlogx(std::max(x(i), 0.0));
    }
    return s;
  };
  h.conjugate_fn = [](const Vector& z) { return log_sum_exp(z); };
  h.grad_conjugate_fn = [](const Vector& z) { return softmax(z); };

  MirrorMapSide F;
  F.kind = MirrorKind::Entropy;
  F.n = n;
  F.value = [n](const Vector& x) -> double {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (x(i) < 0.0) {
        return kInf;
      }
      s += xlogx(x(i));
    }
    return s;
  };
  F.grad = [n](const Vector& x) -> Vector {
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(x(i) > 0.0)) {
        throw DomainError(
            "entropy gradient undefined at coordinate " + std::to_string(i) +
            " = " + std::to_string(x(i)));
      }
      g(i) = 1.0 + std::log(x(i));
    }
    return g;
  };
  F.grad_conjugate = [n](const Vector& z) -> Vector {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = std::exp(z(i) - 1.0);
    }
    return x;
  };
  h.mirror = std::move(F);
  return h;
}

Regularizer elastic_net_regularizer(Eigen::Index n) {
  Regularizer h;
  h.kind = RegKind::ElasticNet;
  h.n = n;
  h.name = "elastic_net(" + std::to_string(n) + ")";
  h.strong_convexity_K = 2.0;
  h.norm = NormTag::L2;
  h.domain = full_space(n);
  h.value_fn = [](const Vector& x) {
    return x.lpNorm<1>() + x.squaredNorm();
  };
  h.conjugate_fn = [](const Vector& z) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      const double t = std::max(std::abs(z(i)) - 1.0, 0.0);
      s += 0.25 * t * t;
    }
    return s;
  };
  h.grad_conjugate_fn = [](const Vector& z) {
    Vector x(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      const double t = std::max(std::abs(z(i)) - 1.0, 0.0);
      x(i) = (z(i) >= 0.0 ? 0.5 : -0.5) * t;
    }
    return x;
  };
  // Nondifferentiable at sparse points: no mirror-map side by design.
  h.mirror = std::nullopt;
  return h;
}

Regularizer product(const Regularizer& a, const Regularizer& b) {
  Regularizer h;
  h.kind = RegKind::Product;
  h.n = a.n + b.n;
  h.name = a.name + " x " + b.name;
  h.strong_convexity_K = std::min(a.strong_convexity_K, b.strong_convexity_K);
  h.norm = a.norm;
  h.domain = product(a.domain, b.domain);
  const Eigen::Index na = a.n;
  const Eigen::Index nb = b.n;
  h.value_fn = [a, b, na, nb](const Vector& x) {
    return reg_value(a, x.head(na)) + reg_value(b, x.tail(nb));
  };
  h.conjugate_fn = [a, b, na, nb](const Vector& z) {
    return reg_conjugate(a, z.head(na)) + reg_conjugate(b, z.tail(nb));
  };
  h.grad_conjugate_fn = [a, b, na, nb](const Vector& z) {
    Vector x(na + nb);
    x << grad_conjugate(a, z.head(na)), grad_conjugate(b, z.tail(nb));
    return x;
  };
  if (a.mirror && b.mirror) {
    const MirrorMapSide Fa = *a.mirror;
    const MirrorMapSide Fb = *b.mirror;
    MirrorMapSide F;
    F.kind = MirrorKind::Product;
    F.n = h.n;
    F.value = [Fa, Fb, na, nb](const Vector& x) {
      return Fa.value(x.head(na)) + Fb.value(x.tail(nb));
    };
    F.grad = [Fa, Fb, na, nb](const Vector& x) {
      Vector g(na + nb);
      g << Fa.grad(x.head(na)), Fb.grad(x.tail(nb));
      return g;
    };
    F.grad_conjugate = [Fa, Fb, na, nb](const Vector& z) {
      Vector x(na + nb);
      x << Fa.grad_conjugate(z.head(na)), Fb.grad_conjugate(z.tail(nb));
      return x;
    };
    F.parts = {Fa, Fb};
    h.mirror = std::move(F);
  }
  return h;
}

double reg_value(const Regularizer& h, const Vector& x) {
  require_dim(x, h.n, "reg_value");
  return h.value_fn(x);
}

double reg_conjugate(const Regularizer& h, const Vector& zeta) {
  require_dim(zeta, h.n, "reg_conjugate");
  require_finite(zeta, "reg_conjugate argument");
  return h.conjugate_fn(zeta);
}

Vector grad_conjugate(const Regularizer& h, const Vector& zeta) {
  require_dim(zeta, h.n, "grad_conjugate");
  require_finite(zeta, "grad_conjugate argument");
  return h.grad_conjugate_fn(zeta);
}

Vector md_subgradient(const Regularizer& h, const Vector& x) {
  require_dim(x, h.n, "md_subgradient");
  if (!h.mirror) {
    throw UnsupportedError("md_subgradient: " + h.name +
                           " has no mirror-map side");
  }
  if (!contains(h.domain, x, kDomainTol)) {
    throw DomainError("md_subgradient: point outside dom h");
  }
  return h.mirror->grad(x);
}

Vector bregman_project(const MirrorMapSide& F, const ConstraintSet& set,
                       const Vector& x0) {
  require_dim(x0, set.n, "bregman_project");
  require_finite(x0, "bregman_project point");
  switch (F.kind) {
    case MirrorKind::Euclidean:
      // D_F(x, x0) = ||x - x0||^2 / 2.
      return euclidean_project(set, x0);
    case MirrorKind::Entropy: {
      if (x0.minCoeff() <= 0.0) {
        throw DomainError("bregman_project: x0 outside int dom F");
      }
      if (set.kind != SetKind::Simplex) {
        throw UnsupportedError(
            "bregman_project: entropy projection implemented for the "
            "simplex only");
      }
      // KL projection onto the simplex is normalization.
      return x0 / x0.sum();
    }
    case MirrorKind::Product: {
      if (set.kind != SetKind::Product || set.parts.size() != 2 ||
          F.parts.size() != 2) {
        throw UnsupportedError(
            "bregman_project: product mirror map needs a product set");
      }
      const Eigen::Index na = set.parts[0].n;
      Vector out(set.n);
      out << bregman_project(F.parts[0], set.parts[0], x0.head(na)),
          bregman_project(F.parts[1], set.parts[1], x0.tail(set.n - na));
      return out;
    }
  }
  throw UnsupportedError("bregman_project: unknown mirror map kind");
}

double fenchel_residual(const Regularizer& h, const Vector& x,
                        const Vector& theta) {
  return std::abs(theta.dot(x) - reg_value(h, x) - reg_conjugate(h, theta));
}

}  // namespace umd
