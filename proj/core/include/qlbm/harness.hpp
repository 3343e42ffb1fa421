#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "qlbm/config.hpp"
#include "qlbm/pdf_field.hpp"
#include "qlbm/statevector.hpp"

namespace qlbm {

/// Acceptance thresholds used by `run` and by the acceptance suite.
inline constexpr double kCase1PlateauTolerance = 0.10;
inline constexpr double kCase1FrontTolerance = 3.0;  // cells
inline constexpr double kCase1PlateauMargin = 20.0;  // cells trimmed off each plateau end
inline constexpr double kCase2RmseLimit = 1e-5;
inline constexpr double kRmseGuard = 1e-30;

/// Rest state with rho = 1 + delta_rho for 1-based cell x <= nx/2 and 1
/// elsewhere, bounce-back at both ends.
[[nodiscard]] PdfField init_discontinuity(const CaseConfig& config);

/// f_i = w_i [1 + A_x cos(2 pi k_x y / ny) e_ix + A_y cos(2 pi k_y x / nx) e_iy]
/// on a doubly periodic grid, x and y 0-based.
[[nodiscard]] PdfField init_kolmogorov(const CaseConfig& config);

/// Relative RMSE of fp against fe, per direction and averaged over directions.
struct RmseResult {
  double viscosity = 0.0;
  double mean_rmse = 0.0;
  std::vector<double> per_direction;
  /// mean_i sqrt(|mean_j (fp - fe) / fe|), the variant without the square.
  double mean_rmse_unsquared_abs = 0.0;
  /// Entries whose |fe| fell below kRmseGuard.
  std::size_t flagged = 0;
};

/// Throws DimensionError on mismatched shapes.
[[nodiscard]] RmseResult rmse(const PdfField& fp, const PdfField& fe);

/// Runs `steps` steps in the requested mode. The trace is filled for every
/// mode; classical modes report norm = scale = 1.
[[nodiscard]] RunResult simulate(const PdfField& f0, double tau, long steps, RunMode mode,
                                 PlanVariant variant);

struct Case1Result {
  std::vector<double> x;  // 1-based cell positions
  std::vector<double> p_star_sim, u_sim, p_star_exact, u_exact;
  double x0 = 0.0;
  double time = 0.0;
  double cs = 0.0;
  double plateau_max_rel_p = 0.0;
  double plateau_max_rel_u = 0.0;
  double l2_rel_p = 0.0;
  double l2_rel_u = 0.0;
  double rarefaction_front = 0.0;
  double shock_front = 0.0;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  StepTrace trace;

  [[nodiscard]] double plateau_max_rel() const noexcept {
    return plateau_max_rel_p > plateau_max_rel_u ? plateau_max_rel_p : plateau_max_rel_u;
  }
  [[nodiscard]] double expected_rarefaction_front() const noexcept { return x0 - cs * time; }
  [[nodiscard]] double expected_shock_front() const noexcept { return x0 + cs * time; }
  [[nodiscard]] bool passes() const noexcept;
};

/// Simulates the 1D discontinuity and compares against the isothermal Riemann
/// solution. Writes case1_profile.csv and case1_metrics.csv (and
/// case1_trace.csv) into `out_dir` when it is non-empty.
[[nodiscard]] Case1Result run_case1(const CaseConfig& config,
                                    const std::filesystem::path& out_dir = {});

struct Case2Result {
  std::vector<RmseResult> rows;
  [[nodiscard]] bool passes() const noexcept;
};

/// Kolmogorov-flow viscosity sweep; every viscosity runs concurrently. Each
/// candidate run (config.mode) is compared with classical BGK. Writes
/// case2_rmse.csv, case2_rmse_detail.csv and one case2_nu_<n>.csv per
/// viscosity when `out_dir` is non-empty.
[[nodiscard]] Case2Result run_case2(const CaseConfig& config,
                                    const std::filesystem::path& out_dir = {});

/// Writes a gnuplot script rendering one plot per CSV. Throws
/// std::runtime_error naming the first CSV that does not exist.
void emit_plot_script(const std::vector<std::filesystem::path>& csvs,
                      const std::filesystem::path& script);

}  // namespace qlbm
