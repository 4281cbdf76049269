#pragma once

#include <string>
#include <vector>

namespace umd {

struct SelfTestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;
  bool all_ok() const;
};

/// Condensed invariant battery over the built-in geometries: conjugate
/// round trips, feasibility under extreme duals, the per-step
/// three-point inequalities, the summed regret bound, step
/// certification for every policy, and the extragradient anchor
/// conditions. Deterministic.
SelfTestReport run_selftest();

}  // namespace umd
