#include <qlbm/coefficients.hpp>
#include <qlbm/errors.hpp>
#include <qlbm/lattice.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlbm {
namespace {

TEST(Alpha, HandEvaluatedD1Q3Entries) {
  const AlphaTensor a = alpha(make_lattice(LatticeKind::D1Q3));
  EXPECT_EQ(a.exact(0, 0, 0), Rational(2, 3));
  EXPECT_EQ(a.exact(0, 1, 1), Rational(-1, 3));
  EXPECT_EQ(a.exact(0, 1, 2), Rational(10, 3));
  EXPECT_DOUBLE_EQ(a(0, 1, 2), 10.0 / 3.0);
}

TEST(Alpha, SymmetricInTheLastTwoIndices) {
  for (const auto kind : {LatticeKind::D1Q3, LatticeKind::D2Q9}) {
    const AlphaTensor a = alpha(make_lattice(kind));
    for (int i = 0; i < a.n_e(); ++i)
      for (int j = 0; j < a.n_e(); ++j)
        for (int k = 0; k < a.n_e(); ++k) EXPECT_EQ(a.exact(i, j, k), a.exact(i, k, j));
  }
}

// rho * f_eq_i written out from the textbook equilibrium, independent of the tensor.
double rho_times_equilibrium(const LatticeModel& lat, int i, const std::vector<double>& f) {
  double rho = 0.0, jx = 0.0, jy = 0.0;
  for (int n = 0; n < lat.n_e; ++n) {
    rho += f[n];
    jx += lat.velocities[n][0] * f[n];
    jy += lat.velocities[n][1] * f[n];
  }
  const double ux = jx / rho, uy = jy / rho;
  const double eu = lat.velocities[i][0] * ux + lat.velocities[i][1] * uy;
  const double uu = ux * ux + uy * uy;
  return rho * lat.weight(i) * rho * (1.0 + 3.0 * eu + 4.5 * eu * eu - 1.5 * uu);
}

TEST(Alpha, UpperTriangularContractionIsRhoTimesEquilibrium) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 0.3);
  for (const auto kind : {LatticeKind::D1Q3, LatticeKind::D2Q9}) {
    const LatticeModel lat = make_lattice(kind);
    const AlphaTensor a = alpha(lat);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f(lat.n_e);
      for (double& v : f) v = dist(rng);
      for (int i = 0; i < lat.n_e; ++i) {
        double sum = 0.0;
        for (int j = 0; j < lat.n_e; ++j)
          for (int k = j; k < lat.n_e; ++k) sum += a(i, j, k) * f[j] * f[k];
        EXPECT_NEAR(sum, rho_times_equilibrium(lat, i, f), 1e-13);
      }
    }
  }
}

TEST(Beta, HandEvaluatedEntryAtTauPointSix) {
  const BetaTensor b = beta(alpha(make_lattice(LatticeKind::D1Q3)), 0.6);
  EXPECT_NEAR(b(0, 0, 0), 4.0 / 9.0, 1e-15);
  EXPECT_DOUBLE_EQ(b.tau(), 0.6);
}

TEST(Beta, FullRelaxationKeepsOnlyUpperTriangularAlpha) {
  const AlphaTensor a = alpha(make_lattice(LatticeKind::D2Q9));
  const BetaTensor b = beta(a, 1.0);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      for (int k = 0; k < 9; ++k) EXPECT_EQ(b(i, j, k), j <= k ? a(i, j, k) : 0.0);
}

TEST(Beta, CollisionlessLimitApproachesGamma) {
  const AlphaTensor a = alpha(make_lattice(LatticeKind::D1Q3));
  const BetaTensor b = beta(a, 1e12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(b(i, j, k), gamma_indicator(i, j, k), 1e-11);
}

TEST(Beta, BelowStabilityBoundThrows) {
  const AlphaTensor a = alpha(make_lattice(LatticeKind::D1Q3));
  EXPECT_THROW((void)beta(a, 0.49), StabilityError);
  EXPECT_NO_THROW((void)beta(a, 0.5));
}

TEST(Viscosity, RelaxationTimeFromViscosity) {
  EXPECT_DOUBLE_EQ(tau_from_viscosity(1.0 / 6.0), 1.0);
  EXPECT_NEAR(tau_from_viscosity(0.0088), 0.5264, 1e-15);
  EXPECT_NEAR(tau_from_viscosity(1e-15), 0.5, 1e-14);
  EXPECT_THROW((void)tau_from_viscosity(0.0), std::domain_error);
  EXPECT_THROW((void)tau_from_viscosity(-1.0), std::domain_error);
}

TEST(Coefficients, TensorCsvHasOneRowPerEntry) {
  std::ostringstream out;
  write_tensor_csv(out, alpha(make_lattice(LatticeKind::D1Q3)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "i,j,k,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 27);
}

}  // namespace
}  // namespace qlbm
