#include <qlbm/classical_lbm.hpp>
#include <qlbm/config.hpp>
#include <qlbm/csv.hpp>
#include <qlbm/errors.hpp>
#include <qlbm/harness.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlbm {
namespace {

namespace fs = std::filesystem;

CaseConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("qlbm_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

TEST(Config, DefaultsCarryTheReferenceParameters) {
  const CaseConfig c1 = default_config(CaseKind::discontinuity_1d);
  EXPECT_EQ(c1.nx, 500);
  EXPECT_EQ(c1.steps, 200);
  EXPECT_DOUBLE_EQ(c1.delta_rho, 5e-5);
  const CaseConfig c2 = default_config(CaseKind::kolmogorov_2d);
  EXPECT_EQ(c2.nx, 32);
  EXPECT_EQ(c2.ny, 32);
  EXPECT_EQ(c2.steps, 100);
  ASSERT_EQ(c2.viscosity.size(), 8u);
  EXPECT_DOUBLE_EQ(c2.viscosity.front(), 0.0088);
  EXPECT_DOUBLE_EQ(c2.viscosity.back(), 1.0 / 6.0);
  for (std::size_t n = 2; n < 8; ++n) {
    EXPECT_NEAR(c2.viscosity[n] / c2.viscosity[n - 1], c2.viscosity[1] / c2.viscosity[0], 1e-12);
  }
}

TEST(Config, ParsesKeyValuesCommentsAndFractions) {
  const CaseConfig c = parse(
      "# sweep\ncase = kolmogorov_2d\nviscosity = 0.01, 1/6  # two points\nsteps=10\n"
      "variant = b\nmode = classical_bgk\n");
  EXPECT_EQ(c.case_kind, CaseKind::kolmogorov_2d);
  ASSERT_EQ(c.viscosity.size(), 2u);
  EXPECT_DOUBLE_EQ(c.viscosity[1], 1.0 / 6.0);
  EXPECT_EQ(c.steps, 10);
  EXPECT_EQ(c.variant, PlanVariant::layout_b);
  EXPECT_EQ(c.mode, RunMode::classical_bgk);
}

TEST(Config, RejectsUnknownRepeatedAndInvalidEntries) {
  EXPECT_THROW((void)parse("case = discontinuity_1d\nviscosty = 0.1\n"), ValidationError);
  EXPECT_THROW((void)parse("case = discontinuity_1d\nsteps = 1\nsteps = 2\n"), ValidationError);
  EXPECT_THROW((void)parse("case = discontinuity_1d\nsteps = -1\n"), ValidationError);
  EXPECT_THROW((void)parse("case = discontinuity_1d\nlattice = D2Q9\n"), ValidationError);
  EXPECT_THROW((void)parse("steps = 3\n"), ValidationError);
  EXPECT_THROW((void)parse("case = discontinuity_1d\nsteps\n"), ValidationError);
}

TEST(Config, CaseOverrideWins) {
  std::istringstream in("case = discontinuity_1d\n");
  EXPECT_EQ(parse_config(in, CaseKind::kolmogorov_2d).case_kind, CaseKind::kolmogorov_2d);
}

TEST(Harness, DiscontinuityInitialState) {
  const CaseConfig c = default_config(CaseKind::discontinuity_1d);
  const PdfField f = init_discontinuity(c);
  const auto& lat = f.lattice();
  for (int i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(f(i, 0, 0), (1.0 + 5e-5) * lat.weight(i));
    EXPECT_DOUBLE_EQ(f(i, 249, 0), (1.0 + 5e-5) * lat.weight(i));
    EXPECT_DOUBLE_EQ(f(i, 250, 0), lat.weight(i));
  }
  EXPECT_NEAR(f.total_mass(), 500.0 + 5e-5 * 250.0, 1e-11);
  EXPECT_EQ(f.grid().boundary_x, Boundary::bounce_back);
}

TEST(Harness, FlatDiscontinuityIsAFixedPoint) {
  CaseConfig c = default_config(CaseKind::discontinuity_1d);
  c.nx = 20;
  c.delta_rho = 0.0;
  const PdfField f = init_discontinuity(c);
  const RunResult r = simulate(f, 1.0, 5, RunMode::quantum_emulated, PlanVariant::layout_a);
  for (std::size_t n = 0; n < f.values().size(); ++n)
    EXPECT_NEAR(r.field.values()[n], f.values()[n], 1e-15);
}

TEST(Harness, KolmogorovInitialState) {
  const PdfField f = init_kolmogorov(default_config(CaseKind::kolmogorov_2d));
  EXPECT_NEAR(f(1, 0, 0), (1.0 / 9.0) * 1.3, 1e-16);
  const auto& lat = f.lattice();
  for (int y = 0; y < 32; ++y)
    for (int x = 0; x < 32; ++x) EXPECT_DOUBLE_EQ(f(0, x, y), lat.weight(0));
  for (double rho : moments(f).rho) EXPECT_NEAR(rho, 1.0, 1e-15);
  EXPECT_THROW((void)init_kolmogorov(default_config(CaseKind::discontinuity_1d)), ValidationError);
}

TEST(Harness, RmseExamples) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const Grid grid = make_grid_1d(2, Boundary::periodic);
  const PdfField fe(lat, grid, {1.0, 2.0, 1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(rmse(fe, fe).mean_rmse, 0.0);

  PdfField scaled = fe;
  for (double& v : scaled.values()) v *= 1.0 + 1e-3;
  EXPECT_NEAR(rmse(scaled, fe).mean_rmse, 1e-3, 1e-15);

  const PdfField fp(lat, grid, {1.3, 2.8, 1.0, 1.0, 1.0, 1.0});
  const RmseResult r = rmse(fp, fe);
  EXPECT_NEAR(r.per_direction[0], 0.25 * std::sqrt(2.0), 1e-15);
  EXPECT_EQ(r.per_direction[1], 0.0);
  EXPECT_EQ(r.flagged, 0u);
}

TEST(Harness, RmseGuardIsFlagged) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const Grid grid = make_grid_1d(1, Boundary::periodic);
  const RmseResult r = rmse(PdfField(lat, grid, {1.0, 0.0, 1.0}), PdfField(lat, grid, {1.0, 0.0, 1.0}));
  EXPECT_EQ(r.flagged, 1u);
  EXPECT_EQ(r.mean_rmse, 0.0);
}

TEST(Harness, PlotScriptIsDeterministicAndNamesMissingFiles) {
  TempDir dir("plot");
  const fs::path csv = dir.path / "case2_rmse.csv";
  std::ofstream(csv) << "nu,mean_rmse\n0.1,1e-6\n";
  emit_plot_script({csv}, dir.path / "a.gp");
  emit_plot_script({csv}, dir.path / "b.gp");
  const std::string a = slurp(dir.path / "a.gp");
  EXPECT_FALSE(a.empty());
  EXPECT_NE(a.find("case2_rmse.csv"), std::string::npos);
  // Only the header comment names the script itself.
  EXPECT_EQ(a.substr(a.find('\n')), slurp(dir.path / "b.gp").substr(a.find('\n')));

  try {
    emit_plot_script({csv, dir.path / "missing.csv"}, dir.path / "c.gp");
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("missing.csv"), std::string::npos);
  }
  EXPECT_FALSE(fs::exists(dir.path / "c.gp"));
}

TEST(Harness, CsvNumberFormattingRoundTrips) {
  for (const double v : {0.1, 1.0 / 3.0, 5e-5, 1e20, -2.5, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Harness, SmallDiscontinuityRunWritesIdenticalArtifactsTwice) {
  CaseConfig c = default_config(CaseKind::discontinuity_1d);
  c.nx = 60;
  c.steps = 10;
  TempDir a("case1_a");
  TempDir b("case1_b");
  (void)run_case1(c, a.path);
  (void)run_case1(c, b.path);
  for (const char* name : {"case1_profile.csv", "case1_metrics.csv", "case1_trace.csv"}) {
    ASSERT_TRUE(fs::exists(a.path / name)) << name;
    EXPECT_EQ(slurp(a.path / name), slurp(b.path / name)) << name;
  }
}

}  // namespace
}  // namespace qlbm
