// qlbm: run the verification cases, the resource sweep and the self test.
//
// Exit codes: 0 success, 1 numerical-acceptance failure, 2 validation failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qlbm/config.hpp"
#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"
#include "qlbm/harness.hpp"
#include "qlbm/resources.hpp"
#include "qlbm/selftest.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAcceptance = 1;
constexpr int kExitValidation = 2;

fs::path resolve_output_dir(const std::string& cli_out, const std::string& config_out) {
  if (!cli_out.empty()) return cli_out;
  if (const char* env = std::getenv("QLBM_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return config_out.empty() ? fs::path("out") : fs::path(config_out);
}

int write_resources(const qlbm::LatticeModel& lattice, double grid_min, double grid_max,
                    int points, const fs::path& out_dir) {
  const auto sizes = qlbm::resources::log_spaced_grid_sizes(grid_min, grid_max, points);
  const auto report = qlbm::resources::sweep(lattice, sizes);
  const auto csv = out_dir / "resources.csv";
  qlbm::write_file_atomically(csv, [&](std::ostream& out) { qlbm::resources::write_csv(out, report); });
  qlbm::emit_plot_script({csv}, out_dir / "plot_resources.gp");
  std::cout << "wrote " << csv.string() << " (" << report.rows.size() << " rows, "
            << lattice.name() << ")\n";
  return kExitOk;
}

int run_case(const std::string& case_name, const std::string& config_path,
             const std::string& mode, const std::string& variant, const std::string& out) {
  std::optional<qlbm::CaseKind> kind;
  if (!case_name.empty()) kind = qlbm::parse_case_kind(case_name);

  qlbm::CaseConfig config;
  if (!config_path.empty()) {
    config = qlbm::load_config(config_path, kind);
  } else if (kind) {
    config = qlbm::default_config(*kind);
  } else {
    throw qlbm::ValidationError("give --case or --config");
  }
  if (!mode.empty()) config.mode = qlbm::parse_run_mode(mode);
  if (!variant.empty()) config.variant = qlbm::parse_variant(variant);
  qlbm::validate(config);

  const fs::path out_dir = resolve_output_dir(out, config.output_dir);
  std::cout << "case " << qlbm::to_string(config.case_kind) << ", mode "
            << qlbm::to_string(config.mode) << ", " << qlbm::to_string(config.variant)
            << ", output " << out_dir.string() << '\n';

  switch (config.case_kind) {
    case qlbm::CaseKind::discontinuity_1d: {
      const auto res = qlbm::run_case1(config, out_dir);
      qlbm::emit_plot_script({out_dir / "case1_profile.csv"}, out_dir / "plot_case1.gp");
      std::cout << "plateau max relative difference: p* " << qlbm::format_double(res.plateau_max_rel_p)
                << ", u " << qlbm::format_double(res.plateau_max_rel_u) << '\n'
                << "global L2 relative difference (p*): " << qlbm::format_double(res.l2_rel_p) << '\n'
                << "rarefaction front " << qlbm::format_double(res.rarefaction_front) << " (expected "
                << qlbm::format_double(res.expected_rarefaction_front()) << ")\n"
                << "shock front " << qlbm::format_double(res.shock_front) << " (expected "
                << qlbm::format_double(res.expected_shock_front()) << ")\n";
      std::cout << (res.passes() ? "PASS" : "FAIL") << '\n';
      return res.passes() ? kExitOk : kExitAcceptance;
    }
    case qlbm::CaseKind::kolmogorov_2d: {
      const auto res = qlbm::run_case2(config, out_dir);
      qlbm::emit_plot_script({out_dir / "case2_rmse.csv"}, out_dir / "plot_case2.gp");
      for (const auto& r : res.rows) {
        std::cout << "nu " << qlbm::format_double(r.viscosity) << "  <RMSE> "
                  << qlbm::format_double(r.mean_rmse) << '\n';
      }
      std::cout << (res.passes() ? "PASS" : "FAIL") << " (limit "
                << qlbm::format_double(qlbm::kCase2RmseLimit) << ")\n";
      return res.passes() ? kExitOk : kExitAcceptance;
    }
    case qlbm::CaseKind::resources:
      return write_resources(qlbm::make_lattice(config.lattice), 1e1, 1e20, 39, out_dir);
  }
  return kExitValidation;
}

int selftest() {
  int failures = 0;
  for (const auto& c : qlbm::run_selftest()) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    failures += c.passed ? 0 : 1;
  }
  return failures == 0 ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposed quantum lattice Boltzmann emulator"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a verification case");
  std::string case_name, config_path, mode, variant, out;
  run_cmd->add_option("--case", case_name, "discontinuity_1d | kolmogorov_2d | resources");
  run_cmd->add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  run_cmd->add_option("--mode", mode, "classical_bgk | classical_quadratic | quantum_emulated");
  run_cmd->add_option("--variant", variant, "layout_a | layout_b");
  run_cmd->add_option("--out", out, "output directory (overrides QLBM_OUTPUT_DIR)");

  auto* res_cmd = app.add_subcommand("resources", "Qubit and CNOT estimates over grid sizes");
  std::string lattice_name = "D2Q9";
  double grid_min = 1e1;
  double grid_max = 1e20;
  int points = 39;
  std::string res_out;
  res_cmd->add_option("--lattice", lattice_name, "D1Q3 | D2Q9")->capture_default_str();
  res_cmd->add_option("--grid-min", grid_min, "smallest grid size")->capture_default_str();
  res_cmd->add_option("--grid-max", grid_max, "largest grid size")->capture_default_str();
  res_cmd->add_option("--points", points, "log-spaced sample count")->capture_default_str();
  res_cmd->add_option("--out", res_out, "output directory (overrides QLBM_OUTPUT_DIR)");

  app.add_subcommand("selftest", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (run_cmd->parsed()) return run_case(case_name, config_path, mode, variant, out);
    if (res_cmd->parsed()) {
      return write_resources(qlbm::make_lattice(lattice_name), grid_min, grid_max, points,
                             resolve_output_dir(res_out, {}));
    }
    return selftest();
  } catch (const qlbm::ValidationError& e) {
    std::cerr << "qlbm: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "qlbm: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "qlbm: " << e.what() << '\n';
    return kExitAcceptance;
  }
}
