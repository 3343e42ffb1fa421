#pragma once

#include <qlbm/classical_lbm.hpp>
#include <qlbm/lattice.hpp>
#include <qlbm/pdf_field.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace qlbm::testing {

/// Near-equilibrium field: equilibrium of rho = 1 + delta * noise, u = 0.05 * noise, then each
/// population scaled by 1 + perturbation * noise so the field is not exactly at equilibrium.
inline PdfField random_positive_field(const LatticeModel& lattice, const Grid& grid,
                                      std::uint64_t seed, double delta = 0.01,
                                      double perturbation = 0.05) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Macros macros;
  macros.rho.resize(grid.n_g());
  macros.momentum.assign(static_cast<std::size_t>(lattice.dims) * grid.n_g(), 0.0);
  for (std::size_t g = 0; g < grid.n_g(); ++g) {
    macros.rho[g] = 1.0 + delta * unit(rng);
    for (int d = 0; d < lattice.dims; ++d) {
      macros.momentum[d * grid.n_g() + g] = macros.rho[g] * 0.05 * unit(rng);
    }
  }
  PdfField f = equilibrium(macros, lattice, grid);
  for (double& v : f.values()) v *= 1.0 + perturbation * unit(rng);
  return f;
}

inline double max_relative_difference(std::span<const double> a, std::span<const double> b) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    diff = std::max(diff, std::abs(a[n] - b[n]));
    scale = std::max(scale, std::abs(b[n]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace qlbm::testing
