#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlbm {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant suite behind `qlbm selftest`: lattice moments, quadratic
/// identities, streaming permutation, one emulated step vs. the classical
/// (2 - rho) step, resource headline values, weak-wave Riemann limit.
[[nodiscard]] std::vector<SelftestCheck> run_selftest(std::uint64_t seed = 1);

}  // namespace qlbm
