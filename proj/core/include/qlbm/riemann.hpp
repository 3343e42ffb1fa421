#pragma once

#include <span>
#include <vector>

namespace qlbm {

/// Isothermal (p = cs^2 rho) 1D Riemann problem, initial discontinuity at x0.
struct RiemannSetup {
  double rho_left = 1.0;
  double rho_right = 1.0;
  double u_left = 0.0;
  double u_right = 0.0;
  double cs = 0.0;
  double t = 0.0;
  double x0 = 0.0;
};

struct StarState {
  double rho = 0.0;
  double u = 0.0;
};

/// Sampled solution. p_star = (p - p_right) / (delta_rho cs^2), which is
/// (rho - rho_right) / (rho_left - rho_right); identically 0 for a zero jump.
struct RiemannSolution {
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> p_star;
};

/// Star state by bisection on the velocity-matching function (relative
/// tolerance 1e-14). Throws std::domain_error for nonpositive densities or
/// sound speed.
[[nodiscard]] StarState solve_star_state(const RiemannSetup& setup);

/// Exact isothermal solution at time setup.t.
[[nodiscard]] RiemannSolution solve(const RiemannSetup& setup, std::span<const double> x);

/// Linear-acoustics approximation: two discontinuities at x0 -/+ cs t
/// enclosing rho* = (rho_l + rho_r)/2, u* = cs (rho_l - rho_r) / (rho_l + rho_r).
[[nodiscard]] RiemannSolution solve_linear_acoustics(const RiemannSetup& setup,
                                                     std::span<const double> x);

}  // namespace qlbm
