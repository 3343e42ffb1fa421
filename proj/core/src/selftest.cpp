#include "qlbm/selftest.hpp"

#include <cmath>
#include <random>

#include "qlbm/classical_lbm.hpp"
#include "qlbm/csv.hpp"
#include "qlbm/qlb_operators.hpp"
#include "qlbm/resources.hpp"
#include "qlbm/riemann.hpp"
#include "qlbm/statevector.hpp"

namespace qlbm {

namespace {

PdfField random_near_equilibrium(const LatticeModel& lattice, const Grid& grid, double amplitude,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(-amplitude, amplitude);
  PdfField f(lattice, grid);
  for (int i = 0; i < lattice.n_e; ++i) {
    for (std::size_t s = 0; s < grid.n_g(); ++s) {
      f.values()[i * grid.n_g() + s] = lattice.weight(i) * (1.0 + jitter(rng));
    }
  }
  return f;
}

double max_rel_diff(const PdfField& a, const PdfField& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < a.n_f(); ++n) {
    worst = std::max(worst, std::abs(a.values()[n] - b.values()[n]) / std::abs(b.values()[n]));
  }
  return worst;
}

SelftestCheck check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SelftestCheck> out;

  for (auto kind : {LatticeKind::D1Q3, LatticeKind::D2Q9}) {
    const auto lat = make_lattice(kind);
    Rational w_sum = 0;
    Rational first[2] = {0, 0};
    Rational second[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < lat.n_e; ++i) {
      w_sum += lat.weights[i];
      for (int a = 0; a < 2; ++a) {
        first[a] += lat.weights[i] * lat.velocities[i][a];
        for (int b = 0; b < 2; ++b) {
          second[a][b] += lat.weights[i] * lat.velocities[i][a] * lat.velocities[i][b];
        }
      }
    }
    bool ok = w_sum == Rational(1) && first[0] == Rational(0) && first[1] == Rational(0);
    for (int a = 0; a < lat.dims; ++a) {
      for (int b = 0; b < lat.dims; ++b) ok = ok && second[a][b] == (a == b ? lat.cs2 : Rational(0));
    }
    out.push_back(check(std::string("lattice moments ") + std::string(lat.name()), ok, "exact"));
  }

  for (auto kind : {LatticeKind::D1Q3, LatticeKind::D2Q9}) {
    const auto lat = make_lattice(kind);
    const Grid grid = kind == LatticeKind::D1Q3 ? make_grid_1d(16, Boundary::periodic)
                                                : make_grid_2d(4, 4, Boundary::periodic);
    const auto f = random_near_equilibrium(lat, grid, 0.05, rng);
    const auto coeffs = beta(alpha(lat), 0.6);
    const double err =
        max_rel_diff(collide_quadratic(f, coeffs, InverseRhoMode::exact), collide_bgk(f, 0.6));
    out.push_back(check("quadratic collision == BGK " + std::string(lat.name()), err <= 1e-12,
                        "max rel " + format_double(err)));
  }

  {
    const auto lat = make_lattice(LatticeKind::D2Q9);
    const Grid grid = make_grid_2d(3, 4, Boundary::bounce_back);
    const auto s = build_stream_matrix(lat, grid);
    out.push_back(check("streaming matrix is a permutation",
                        (s * s.transpose()).is_identity(), "S S^T == I"));
  }

  for (auto kind : {LatticeKind::D1Q3, LatticeKind::D2Q9}) {
    const auto lat = make_lattice(kind);
    const Grid grid = kind == LatticeKind::D1Q3 ? make_grid_1d(8, Boundary::bounce_back)
                                                : make_grid_2d(4, 4, Boundary::periodic);
    const auto f = random_near_equilibrium(lat, grid, 0.01, rng);
    const double tau = 0.7;
    const auto expected = step(f, tau, CollisionMode::quadratic_linear);
    for (auto variant : {PlanVariant::layout_a, PlanVariant::layout_b}) {
      const auto got = run(f, tau, 1, variant).field;
      const double err = max_rel_diff(got, expected);
      out.push_back(check("emulated step == (2 - rho) step " + std::string(lat.name()) + " " +
                              std::string(to_string(variant)),
                          err <= 1e-12, "max rel " + format_double(err)));
    }
  }

  {
    const int q = resources::qubits_present(9216);
    const int c = resources::qubits_carleman(9216, 2);
    out.push_back(check("resource headline values", q == 16 && c == 28,
                        "present " + std::to_string(q) + ", CL2 " + std::to_string(c)));
  }

  {
    const RiemannSetup setup{1.0 + 5e-5, 1.0, 0.0, 0.0, std::sqrt(1.0 / 3.0), 200.0, 250.5};
    const StarState star = solve_star_state(setup);
    const double u_lin = setup.cs * 5e-5 / (2.0 + 5e-5);
    const double err = std::max(std::abs(star.rho - (1.0 + 2.5e-5)) / 2.5e-5,
                                std::abs(star.u - u_lin) / u_lin);
    out.push_back(check("weak-wave Riemann limit", err <= 1e-4, "rel " + format_double(err)));
  }

  return out;
}

}  // namespace qlbm
