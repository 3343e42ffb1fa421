#include "qlbm/riemann.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlbm {

namespace {

// Velocity change across a wave connecting rho_k to rho: logarithmic for a
// rarefaction (rho <= rho_k), Rankine-Hugoniot for a shock.
double wave_function(double rho, double rho_k, double cs) {
  if (rho <= rho_k) return cs * std::log(rho / rho_k);
  return cs * (rho - rho_k) / std::sqrt(rho * rho_k);
}

void validate(const RiemannSetup& s) {
  if (!(s.rho_left > 0.0) || !(s.rho_right > 0.0)) {
    throw std::domain_error("Riemann states need positive densities (vacuum is not supported)");
  }
  if (!(s.cs > 0.0)) throw std::domain_error("sound speed must be positive");
  if (!(s.t >= 0.0)) throw std::domain_error("evaluation time must be non-negative");
}

double normalized_pressure(const RiemannSetup& s, double rho) {
  const double jump = s.rho_left - s.rho_right;
  if (jump == 0.0) return 0.0;
  return (rho - s.rho_right) / jump;
}

}  // namespace

StarState solve_star_state(const RiemannSetup& s) {
  validate(s);
  const auto mismatch = [&](double rho) {
    return wave_function(rho, s.rho_left, s.cs) + wave_function(rho, s.rho_right, s.cs) +
           (s.u_right - s.u_left);
  };

  // mismatch is strictly increasing in rho; widen the bracket until it changes sign.
  double lo = std::min(s.rho_left, s.rho_right);
  double hi = std::max(s.rho_left, s.rho_right);
  while (mismatch(lo) > 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw std::domain_error("Riemann star state approaches vacuum");
  }
  while (mismatch(hi) < 0.0) hi *= 2.0;

  for (int it = 0; it < 400 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mismatch(mid) > 0.0 ? hi : lo) = mid;
  }
  const double rho = 0.5 * (lo + hi);
  return {rho, s.u_left - wave_function(rho, s.rho_left, s.cs)};
}

RiemannSolution solve(const RiemannSetup& s, std::span<const double> x) {
  const StarState star = solve_star_state(s);
  const double cs = s.cs;
  RiemannSolution out;
  out.rho.resize(x.size());
  out.u.resize(x.size());
  out.p_star.resize(x.size());

  for (std::size_t n = 0; n < x.size(); ++n) {
    double rho = 0.0;
    double u = 0.0;
    if (s.t == 0.0) {
      const bool left = x[n] <= s.x0;
      rho = left ? s.rho_left : s.rho_right;
      u = left ? s.u_left : s.u_right;
    } else {
      const double xi = (x[n] - s.x0) / s.t;
      if (xi <= star.u) {
        if (star.rho > s.rho_left) {
          const double speed = s.u_left - cs * std::sqrt(star.rho / s.rho_left);
          rho = xi < speed ? s.rho_left : star.rho;
          u = xi < speed ? s.u_left : star.u;
        } else if (xi <= s.u_left - cs) {
          rho = s.rho_left;
          u = s.u_left;
        } else if (xi >= star.u - cs) {
          rho = star.rho;
          u = star.u;
        } else {
          u = xi + cs;
          rho = s.rho_left * std::exp((s.u_left - u) / cs);
        }
      } else {
        if (star.rho > s.rho_right) {
          const double speed = s.u_right + cs * std::sqrt(star.rho / s.rho_right);
          rho = xi > speed ? s.rho_right : star.rho;
          u = xi > speed ? s.u_right : star.u;
        } else if (xi >= s.u_right + cs) {
          rho = s.rho_right;
          u = s.u_right;
        } else if (xi <= star.u + cs) {
          rho = star.rho;
          u = star.u;
        } else {
          u = xi - cs;
          rho = s.rho_right * std::exp((u - s.u_right) / cs);
        }
      }
    }
    out.rho[n] = rho;
    out.u[n] = u;
    out.p_star[n] = normalized_pressure(s, rho);
  }
  return out;
}

RiemannSolution solve_linear_acoustics(const RiemannSetup& s, std::span<const double> x) {
  validate(s);
  const double rho_star = 0.5 * (s.rho_left + s.rho_right);
  const double u_star = 0.5 * (s.u_left + s.u_right) +
                        s.cs * (s.rho_left - s.rho_right) / (s.rho_left + s.rho_right);
  RiemannSolution out;
  out.rho.resize(x.size());
  out.u.resize(x.size());
  out.p_star.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double d = x[n] - s.x0;
    if (d < -s.cs * s.t || (s.t == 0.0 && d <= 0.0)) {
      out.rho[n] = s.rho_left;
      out.u[n] = s.u_left;
    } else if (d > s.cs * s.t || s.t == 0.0) {
      out.rho[n] = s.rho_right;
      out.u[n] = s.u_right;
    } else {
      out.rho[n] = rho_star;
      out.u[n] = u_star;
    }
    out.p_star[n] = normalized_pressure(s, out.rho[n]);
  }
  return out;
}

}  // namespace qlbm
