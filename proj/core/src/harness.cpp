#include "qlbm/harness.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "qlbm/classical_lbm.hpp"
#include "qlbm/coefficients.hpp"
#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"
#include "qlbm/riemann.hpp"

namespace qlbm {

namespace {

double max_abs_rho_minus_1(const Macros& m) {
  double worst = 0.0;
  for (double rho : m.rho) worst = std::max(worst, std::abs(rho - 1.0));
  return worst;
}

/// Linear interpolation of the first downward crossing of `level` in
/// values[first, last).
double downward_crossing(const std::vector<double>& x, const std::vector<double>& values,
                         double level, std::size_t first, std::size_t last) {
  for (std::size_t j = first; j + 1 < last; ++j) {
    if (values[j] >= level && values[j + 1] < level) {
      const double t = (values[j] - level) / (values[j] - values[j + 1]);
      return x[j] + t * (x[j + 1] - x[j]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double relative_l2(const std::vector<double>& sim, const std::vector<double>& exact) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = 0; n < sim.size(); ++n) {
    num += (sim[n] - exact[n]) * (sim[n] - exact[n]);
    den += exact[n] * exact[n];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace

PdfField init_discontinuity(const CaseConfig& config) {
  if (config.lattice != LatticeKind::D1Q3 || config.ny != 1) {
    throw ValidationError("the discontinuity case needs a 1D D1Q3 lattice");
  }
  const auto lattice = make_lattice(LatticeKind::D1Q3);
  const Grid grid = make_grid_1d(config.nx, Boundary::bounce_back);
  Macros m;
  m.rho.assign(grid.n_g(), 1.0);
  m.momentum.assign(grid.n_g(), 0.0);
  // 1-based x <= nx/2 is the high-density side.
  for (int x = 1; 2 * x <= config.nx; ++x) m.rho[x - 1] = 1.0 + config.delta_rho;
  return equilibrium(m, lattice, grid);
}

PdfField init_kolmogorov(const CaseConfig& config) {
  if (config.lattice != LatticeKind::D2Q9) {
    throw ValidationError("the Kolmogorov case needs a D2Q9 lattice");
  }
  const auto lattice = make_lattice(LatticeKind::D2Q9);
  const Grid grid = make_grid_2d(config.nx, config.ny, Boundary::periodic);
  PdfField f(lattice, grid);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < lattice.n_e; ++i) {
    const int ex = lattice.velocities[i][0];
    const int ey = lattice.velocities[i][1];
    for (int y = 0; y < grid.ny; ++y) {
      for (int x = 0; x < grid.nx; ++x) {
        const double shear_x = config.A_x * std::cos(two_pi * config.k_x * y / grid.ny);
        const double shear_y = config.A_y * std::cos(two_pi * config.k_y * x / grid.nx);
        f(i, x, y) = lattice.weight(i) * (1.0 + shear_x * ex + shear_y * ey);
      }
    }
  }
  return f;
}

RmseResult rmse(const PdfField& fp, const PdfField& fe) {
  if (fp.lattice().kind != fe.lattice().kind || fp.n_f() != fe.n_f() ||
      fp.grid().nx != fe.grid().nx || fp.grid().ny != fe.grid().ny) {
    throw DimensionError("rmse needs fields of identical shape");
  }
  const int n_e = fp.lattice().n_e;
  const std::size_t n_g = fp.n_g();
  RmseResult r;
  r.per_direction.resize(n_e);
  for (int i = 0; i < n_e; ++i) {
    const auto p = fp.direction(i);
    const auto e = fe.direction(i);
    double squared = 0.0;
    double signed_sum = 0.0;
    for (std::size_t j = 0; j < n_g; ++j) {
      double den = e[j];
      if (std::abs(den) < kRmseGuard) {
        ++r.flagged;
        den = std::copysign(kRmseGuard, den);
      }
      const double rel = (p[j] - e[j]) / den;
      squared += rel * rel;
      signed_sum += rel;
    }
    r.per_direction[i] = std::sqrt(squared / n_g);
    r.mean_rmse += r.per_direction[i] / n_e;
    r.mean_rmse_unsquared_abs += std::sqrt(std::abs(signed_sum / n_g)) / n_e;
  }
  return r;
}

RunResult simulate(const PdfField& f0, double tau, long steps, RunMode mode, PlanVariant variant) {
  if (mode == RunMode::quantum_emulated) return run(f0, tau, steps, variant);
  if (steps < 0) throw ValidationError("steps must be non-negative");

  const CollisionMode collision =
      mode == RunMode::classical_bgk ? CollisionMode::bgk : CollisionMode::quadratic_linear;
  const auto coeffs = beta(alpha(f0.lattice()), tau);
  RunResult result{f0, {}};
  result.trace.push_back({0, 1.0, 1.0, f0.total_mass(), max_abs_rho_minus_1(moments(f0))});
  for (long s = 1; s <= steps; ++s) {
    result.field = step(result.field, coeffs, collision);
    result.trace.push_back({s, 1.0, 1.0, result.field.total_mass(),
                            max_abs_rho_minus_1(moments(result.field))});
  }
  return result;
}

bool Case1Result::passes() const noexcept {
  return plateau_max_rel() <= kCase1PlateauTolerance &&
         std::abs(rarefaction_front - expected_rarefaction_front()) <= kCase1FrontTolerance &&
         std::abs(shock_front - expected_shock_front()) <= kCase1FrontTolerance;
}

Case1Result run_case1(const CaseConfig& config, const std::filesystem::path& out_dir) {
  validate(config);
  if (config.case_kind != CaseKind::discontinuity_1d) {
    throw ValidationError("run_case1 needs a discontinuity_1d config");
  }
  const PdfField f0 = init_discontinuity(config);
  const double tau = tau_from_viscosity(config.viscosity.front());
  auto sim = simulate(f0, tau, config.steps, config.mode, config.variant);

  Case1Result res;
  const int n = config.nx;
  res.cs = std::sqrt(f0.lattice().sound_speed_squared());
  res.time = static_cast<double>(config.steps);
  res.x0 = std::floor(n / 2.0) + 0.5;
  res.initial_mass = f0.total_mass();
  res.final_mass = sim.field.total_mass();
  res.trace = std::move(sim.trace);

  res.x.resize(n);
  for (int j = 0; j < n; ++j) res.x[j] = j + 1.0;

  const RiemannSetup setup{1.0 + config.delta_rho, 1.0, 0.0, 0.0, res.cs, res.time, res.x0};
  const auto exact = solve(setup, res.x);
  res.p_star_exact = exact.p_star;
  res.u_exact = exact.u;

  const auto m = moments(sim.field);
  res.p_star_sim.resize(n);
  res.u_sim.resize(n);
  for (int j = 0; j < n; ++j) {
    res.p_star_sim[j] = config.delta_rho == 0.0 ? 0.0 : (m.rho[j] - 1.0) / config.delta_rho;
    res.u_sim[j] = m.momentum[j] / m.rho[j];
  }

  res.l2_rel_p = relative_l2(res.p_star_sim, res.p_star_exact);
  res.l2_rel_u = relative_l2(res.u_sim, res.u_exact);

  if (config.delta_rho != 0.0) {
    const StarState star = solve_star_state(setup);
    const double cs = res.cs;
    const double left_speed = star.rho <= setup.rho_left
                                  ? star.u - cs
                                  : -cs * std::sqrt(star.rho / setup.rho_left);
    const double right_speed =
        star.rho > setup.rho_right ? cs * std::sqrt(star.rho / setup.rho_right) : star.u + cs;
    const double lo = res.x0 + left_speed * res.time + kCase1PlateauMargin;
    const double hi = res.x0 + right_speed * res.time - kCase1PlateauMargin;
    for (int j = 0; j < n; ++j) {
      if (res.x[j] <= lo || res.x[j] >= hi) continue;
      res.plateau_max_rel_p = std::max(
          res.plateau_max_rel_p,
          std::abs(res.p_star_sim[j] - res.p_star_exact[j]) / std::abs(res.p_star_exact[j]));
      res.plateau_max_rel_u = std::max(
          res.plateau_max_rel_u, std::abs(res.u_sim[j] - res.u_exact[j]) / std::abs(res.u_exact[j]));
    }
    const double p_star_plateau = (star.rho - setup.rho_right) / config.delta_rho;
    const auto mid = static_cast<std::size_t>(std::floor(res.x0));
    res.rarefaction_front =
        downward_crossing(res.x, res.p_star_sim, 0.5 * (1.0 + p_star_plateau), 0, mid);
    res.shock_front = downward_crossing(res.x, res.p_star_sim, 0.5 * p_star_plateau, mid - 1,
                                        static_cast<std::size_t>(n));
  } else {
    res.rarefaction_front = std::numeric_limits<double>::quiet_NaN();
    res.shock_front = std::numeric_limits<double>::quiet_NaN();
  }

  if (!out_dir.empty()) {
    write_file_atomically(out_dir / "case1_profile.csv", [&](std::ostream& out) {
      out << "x,p_star_sim,u_sim,p_star_exact,u_exact\n";
      for (int j = 0; j < n; ++j) {
        out << format_double(res.x[j]) << ',' << format_double(res.p_star_sim[j]) << ','
            << format_double(res.u_sim[j]) << ',' << format_double(res.p_star_exact[j]) << ','
            << format_double(res.u_exact[j]) << '\n';
      }
    });
    write_file_atomically(out_dir / "case1_metrics.csv", [&](std::ostream& out) {
      out << "metric,value\n"
          << "plateau_max_rel_p," << format_double(res.plateau_max_rel_p) << '\n'
          << "plateau_max_rel_u," << format_double(res.plateau_max_rel_u) << '\n'
          << "l2_rel_p," << format_double(res.l2_rel_p) << '\n'
          << "l2_rel_u," << format_double(res.l2_rel_u) << '\n'
          << "rarefaction_front," << format_double(res.rarefaction_front) << '\n'
          << "expected_rarefaction_front," << format_double(res.expected_rarefaction_front()) << '\n'
          << "shock_front," << format_double(res.shock_front) << '\n'
          << "expected_shock_front," << format_double(res.expected_shock_front()) << '\n'
          << "initial_mass," << format_double(res.initial_mass) << '\n'
          << "final_mass," << format_double(res.final_mass) << '\n';
    });
    write_file_atomically(out_dir / "case1_trace.csv",
                          [&](std::ostream& out) { write_trace_csv(out, res.trace); });
  }
  return res;
}

bool Case2Result::passes() const noexcept {
  if (rows.empty()) return false;
  for (const auto& r : rows) {
    if (!(r.mean_rmse < kCase2RmseLimit) || r.flagged > 0) return false;
  }
  return true;
}

Case2Result run_case2(const CaseConfig& config, const std::filesystem::path& out_dir) {
  validate(config);
  if (config.case_kind != CaseKind::kolmogorov_2d) {
    throw ValidationError("run_case2 needs a kolmogorov_2d config");
  }
  const PdfField f0 = init_kolmogorov(config);

  std::vector<std::future<RmseResult>> jobs;
  jobs.reserve(config.viscosity.size());
  for (std::size_t n = 0; n < config.viscosity.size(); ++n) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      const double nu = config.viscosity[n];
      const double tau = tau_from_viscosity(nu);
      const auto reference = simulate(f0, tau, config.steps, RunMode::classical_bgk, config.variant);
      const auto candidate = simulate(f0, tau, config.steps, config.mode, config.variant);
      RmseResult r = rmse(candidate.field, reference.field);
      r.viscosity = nu;
      if (!out_dir.empty()) {
        write_file_atomically(out_dir / ("case2_nu_" + std::to_string(n) + ".csv"),
                              [&](std::ostream& out) {
                                out << "nu,direction,rmse\n";
                                for (std::size_t i = 0; i < r.per_direction.size(); ++i) {
                                  out << format_double(nu) << ',' << i << ','
                                      << format_double(r.per_direction[i]) << '\n';
                                }
                              });
      }
      return r;
    }));
  }

  Case2Result res;
  for (auto& job : jobs) res.rows.push_back(job.get());

  if (!out_dir.empty()) {
    write_file_atomically(out_dir / "case2_rmse.csv", [&](std::ostream& out) {
      out << "nu,mean_rmse,mean_rmse_unsquared_abs,flagged\n";
      for (const auto& r : res.rows) {
        out << format_double(r.viscosity) << ',' << format_double(r.mean_rmse) << ','
            << format_double(r.mean_rmse_unsquared_abs) << ',' << r.flagged << '\n';
      }
    });
    write_file_atomically(out_dir / "case2_rmse_detail.csv", [&](std::ostream& out) {
      out << "nu,direction,rmse\n";
      for (const auto& r : res.rows) {
        for (std::size_t i = 0; i < r.per_direction.size(); ++i) {
          out << format_double(r.viscosity) << ',' << i << ','
              << format_double(r.per_direction[i]) << '\n';
        }
      }
    });
  }
  return res;
}

}  // namespace qlbm
