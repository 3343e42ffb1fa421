#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/qlb_operators.hpp"

namespace qlbm {

enum class CaseKind { discontinuity_1d, kolmogorov_2d, resources };
enum class RunMode { classical_bgk, classical_quadratic, quantum_emulated };

[[nodiscard]] std::string_view to_string(CaseKind kind) noexcept;
[[nodiscard]] std::string_view to_string(RunMode mode) noexcept;
[[nodiscard]] CaseKind parse_case_kind(std::string_view text);
[[nodiscard]] RunMode parse_run_mode(std::string_view text);

/// One verification case. Defaults come from `default_config`; a config file
/// overrides individual keys.
struct CaseConfig {
  CaseKind case_kind = CaseKind::discontinuity_1d;
  LatticeKind lattice = LatticeKind::D1Q3;
  int nx = 1;
  int ny = 1;
  long steps = 0;
  double delta_rho = 0.0;
  std::vector<double> viscosity;
  double A_x = 0.0;
  double A_y = 0.0;
  int k_x = 0;
  int k_y = 0;
  PlanVariant variant = PlanVariant::layout_a;
  RunMode mode = RunMode::quantum_emulated;
  std::string output_dir;
  std::uint64_t seed = 0;
};

/// Published parameters of each case:
///   discontinuity_1d: D1Q3, 500 cells, 200 steps, delta_rho 5e-5, nu 1/6
///   kolmogorov_2d:    D2Q9, 32x32, 100 steps, A = (0.3, 0.2), k = (1, 4),
///                     8 log-spaced viscosities in [0.0088, 1/6]
///   resources:        D2Q9
[[nodiscard]] CaseConfig default_config(CaseKind kind);

/// `count` log-spaced values in [lo, hi] (endpoints included).
[[nodiscard]] std::vector<double> log_spaced(double lo, double hi, int count);

/// Parses key=value lines ('#' starts a comment). Keys are the CaseConfig
/// field names; `viscosity` takes a comma-separated list. Unknown keys,
/// repeated keys and malformed values throw ValidationError. When
/// `case_override` is set it wins over the file's `case` key; otherwise the
/// file must name the case.
[[nodiscard]] CaseConfig parse_config(std::istream& in,
                                      std::optional<CaseKind> case_override = std::nullopt);
[[nodiscard]] CaseConfig load_config(const std::filesystem::path& path,
                                     std::optional<CaseKind> case_override = std::nullopt);

/// Case-specific checks (lattice, dimensions, positive viscosities, ...).
void validate(const CaseConfig& config);

}  // namespace qlbm
