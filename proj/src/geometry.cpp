#include "umd/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace umd {

namespace {

void check_dim(const ConstraintSet& set, const Vector& v, const char* what) {
  require_dim(v, set.n, what);
}

}  // namespace

ConstraintSet full_space(Eigen::Index n) {
  ConstraintSet set;
  set.kind = SetKind::FullSpace;
  set.n = n;
  set.name = "full_space(" + std::to_string(n) + ")";
  set.compact = false;
  set.center = Vector::Zero(n);
  set.support_min_fn = [n](const Vector& g) -> SupportResult {
    if (g.norm() > 0.0) {
      throw UnboundedError("support_min: <g,x> unbounded below on full space");
    }
    return {0.0, Vector::Zero(n)};
  };
  set.project_fn = [](const Vector& y) { return y; };
  set.vertices_fn = [] { return std::vector<Vector>{}; };
  return set;
}

ConstraintSet euclidean_ball(Vector center, double radius) {
  if (!(radius > 0.0)) {
    throw ArgumentError("euclidean_ball: radius must be positive");
  }
  require_finite(center, "euclidean_ball center");
  ConstraintSet set;
  set.kind = SetKind::EuclideanBall;
  set.n = center.size();
  set.name = "ball(r=" + std::to_string(radius) + ")";
  set.compact = true;
  set.center = center;
  set.support_min_fn = [center, radius](const Vector& g) -> SupportResult {
    const double gn = g.norm();
    if (gn == 0.0) {
      return {0.0, center};
    }
    Vector witness = center - (radius / gn) * g;
    return {g.dot(center) - radius * gn, witness};
  };
  set.project_fn = [center, radius](const Vector& y) -> Vector {
    Vector d = y - center;
    const double dn = d.norm();
    if (dn <= radius) {
      return y;
    }
    return center + (radius / dn) * d;
  };
  set.vertices_fn = [] { return std::vector<Vector>{}; };
  return set;
}

ConstraintSet simplex(Eigen::Index n) {
  if (n < 1) {
    throw ArgumentError("simplex: dimension must be >= 1");
  }
  ConstraintSet set;
  set.kind = SetKind::Simplex;
  set.n = n;
  set.name = "simplex(" + std::to_string(n) + ")";
  set.compact = true;
  set.center = Vector::Constant(n, 1.0 / static_cast<double>(n));
  set.support_min_fn = [n](const Vector& g) -> SupportResult {
    Eigen::Index best = 0;
    g.minCoeff(&best);
    Vector witness = Vector::Zero(n);
    witness(best) = 1.0;
    return {g(best), witness};
  };
  // Sort-and-threshold projection onto the probability simplex.
  set.project_fn = [n](const Vector& y) -> Vector {
    std::vector<double> u(y.data(), y.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double running = 0.0;
    double tau = 0.0;
    Eigen::Index rho = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      running += u[static_cast<size_t>(j)];
      const double candidate = (running - 1.0) / static_cast<double>(j + 1);
      if (u[static_cast<size_t>(j)] - candidate > 0.0) {
        rho = j + 1;
        tau = candidate;
      }
    }
    (void)rho;
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = std::max(y(i) - tau, 0.0);
    }
    return x;
  };
  set.vertices_fn = [n] {
    std::vector<Vector> vs;
    vs.reserve(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      Vector e = Vector::Zero(n);
      e(i) = 1.0;
      vs.push_back(std::move(e));
    }
    return vs;
  };
  return set;
}

ConstraintSet box(Vector lower, Vector upper) {
  if (lower.size() != upper.size()) {
    throw DimensionError("box: lower/upper dimension mismatch");
  }
  require_finite(lower, "box lower");
  require_finite(upper, "box upper");
  if ((upper - lower).minCoeff() < 0.0) {
    throw ArgumentError("box: requires lower <= upper componentwise");
  }
  const Eigen::Index n = lower.size();
  ConstraintSet set;
  set.kind = SetKind::Box;
  set.n = n;
  set.name = "box(" + std::to_string(n) + ")";
  set.compact = true;
  set.center = 0.5 * (lower + upper);
  set.support_min_fn = [lower, upper](const Vector& g) -> SupportResult {
    Vector witness(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      witness(i) = g(i) > 0.0 ? lower(i) : upper(i);
    }
    return {g.dot(witness), witness};
  };
  set.project_fn = [lower, upper](const Vector& y) -> Vector {
    return y.cwiseMax(lower).cwiseMin(upper);
  };
  set.vertices_fn = [lower, upper, n]() -> std::vector<Vector> {
    // Full corner enumeration only for small boxes; otherwise a
    // deterministic sample of corners plus the coordinate extremes.
    std::vector<Vector> vs;
    if (n <= 12) {
      const size_t count = size_t{1} << n;
      vs.reserve(count);
      for (size_t mask = 0; mask < count; ++mask) {
        Vector v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          v(i) = (mask >> i) & 1 ? upper(i) : lower(i);
        }
        vs.push_back(std::move(v));
      }
    } else {
      vs.push_back(lower);
      vs.push_back(upper);
      std::mt19937_64 rng(0xb0c5ULL);
      std::bernoulli_distribution coin(0.5);
      for (int s = 0; s < 256; ++s) {
        Vector v(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          v(i) = coin(rng) ? upper(i) : lower(i);
        }
        vs.push_back(std::move(v));
      }
    }
    return vs;
  };
  return set;
}

ConstraintSet segment_2d(Vector a, Vector b) {
  if (a.size() != 2 || b.size() != 2) {
    throw DimensionError("segment_2d: endpoints must be 2-dimensional");
  }
  require_finite(a, "segment endpoint");
  require_finite(b, "segment endpoint");
  ConstraintSet set;
  set.kind = SetKind::Segment2D;
  set.n = 2;
  set.name = "segment2d";
  set.compact = true;
  set.center = 0.5 * (a + b);
  set.support_min_fn = [a, b](const Vector& g) -> SupportResult {
    const double va = g.dot(a);
    const double vb = g.dot(b);
    return va <= vb ? SupportResult{va, a} : SupportResult{vb, b};
  };
  set.project_fn = [a, b](const Vector& y) -> Vector {
    const Vector d = b - a;
    const double dd = d.squaredNorm();
    if (dd == 0.0) {
      return a;
    }
    const double t = std::clamp((y - a).dot(d) / dd, 0.0, 1.0);
    return a + t * d;
  };
  set.vertices_fn = [a, b] { return std::vector<Vector>{a, b}; };
  return set;
}

ConstraintSet product(const ConstraintSet& a, const ConstraintSet& b) {
  ConstraintSet set;
  set.kind = SetKind::Product;
  set.n = a.n + b.n;
  set.name = a.name + " x " + b.name;
  set.compact = a.compact && b.compact;
  set.center = Vector(set.n);
  set.center << a.center, b.center;
  const Eigen::Index na = a.n;
  const Eigen::Index nb = b.n;
  set.support_min_fn = [a, b, na, nb](const Vector& g) -> SupportResult {
    SupportResult ra = support_min(a, g.head(na));
    SupportResult rb = support_min(b, g.tail(nb));
    Vector witness(na + nb);
    witness << ra.witness, rb.witness;
    return {ra.value + rb.value, witness};
  };
  set.project_fn = [a, b, na, nb](const Vector& y) -> Vector {
    Vector out(na + nb);
    out << euclidean_project(a, y.head(na)), euclidean_project(b, y.tail(nb));
    return out;
  };
  set.parts = {a, b};
  set.vertices_fn = [a, b, na, nb]() -> std::vector<Vector> {
    std::vector<Vector> va = a.vertices_fn();
    std::vector<Vector> vb = b.vertices_fn();
    std::vector<Vector> vs;
    if (va.empty() || vb.empty()) {
      return vs;
    }
    vs.reserve(va.size() * vb.size());
    for (const Vector& u : va) {
      for (const Vector& w : vb) {
        Vector v(na + nb);
        v << u, w;
        vs.push_back(std::move(v));
      }
    }
    return vs;
  };
  return set;
}

SupportResult support_min(const ConstraintSet& set, const Vector& g) {
  check_dim(set, g, "support_min");
  require_finite(g, "support_min direction");
  return set.support_min_fn(g);
}

Vector euclidean_project(const ConstraintSet& set, const Vector& y) {
  check_dim(set, y, "euclidean_project");
  require_finite(y, "euclidean_project point");
  return set.project_fn(y);
}

bool contains(const ConstraintSet& set, const Vector& x, double tol) {
  check_dim(set, x, "contains");
  if (tol < 0.0) {
    throw ArgumentError("contains: tol must be nonnegative");
  }
  if (!is_finite(x)) {
    return false;
  }
  return (x - set.project_fn(x)).norm() <= tol;
}

std::vector<Vector> probe_points(const ConstraintSet& set, int budget) {
  std::vector<Vector> probes = set.vertices_fn();
  if (!probes.empty()) {
    return probes;
  }
  probes.push_back(set.center);
  if (set.kind == SetKind::FullSpace) {
    return probes;
  }
  // Deterministic boundary sample for sets without vertices.
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < budget; ++s) {
    Vector d(set.n);
    for (Eigen::Index i = 0; i < set.n; ++i) {
      d(i) = gauss(rng);
    }
    const double dn = d.norm();
    if (dn == 0.0) {
      continue;
    }
    // Push far along the direction and project back to land on the boundary.
    probes.push_back(set.project_fn(set.center + (1e6 / dn) * d));
  }
  return probes;
}

}  // namespace umd
