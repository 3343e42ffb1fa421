#include "qlbm/classical_lbm.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

#include "qlbm/errors.hpp"

namespace qlbm {

namespace {

void require_stable(double tau) {
  if (!(tau >= 0.5)) {
    throw StabilityError("relaxation parameter tau = " + std::to_string(tau) +
                         " is below the BGK stability bound 0.5");
  }
}

void warn_if_nonpositive(const PdfField& f, const char* where) {
  if (const auto n = f.count_nonpositive(); n > 0) {
    std::clog << "qlbm: warning: " << n << " nonpositive populations after " << where << '\n';
  }
}

}  // namespace

Macros moments(const PdfField& f) {
  const auto& lat = f.lattice();
  const std::size_t n_g = f.n_g();
  Macros m;
  m.rho.assign(n_g, 0.0);
  m.momentum.assign(static_cast<std::size_t>(lat.dims) * n_g, 0.0);
  for (int i = 0; i < lat.n_e; ++i) {
    const auto fi = f.direction(i);
    for (std::size_t s = 0; s < n_g; ++s) {
      m.rho[s] += fi[s];
      for (int a = 0; a < lat.dims; ++a) m.momentum[a * n_g + s] += lat.velocities[i][a] * fi[s];
    }
  }
  return m;
}

PdfField equilibrium(const Macros& macros, const LatticeModel& lattice, const Grid& grid) {
  const std::size_t n_g = grid.n_g();
  if (macros.rho.size() != n_g || macros.momentum.size() != lattice.dims * n_g) {
    throw DimensionError("macroscopic fields do not match the grid");
  }
  const double inv_cs2 = 1.0 / lattice.sound_speed_squared();
  PdfField feq(lattice, grid);
  auto out = feq.data();
  for (std::size_t s = 0; s < n_g; ++s) {
    const double rho = macros.rho[s];
    if (!(rho > 0.0)) {
      throw std::domain_error("equilibrium needs positive density, got rho = " +
                              std::to_string(rho) + " at site " + std::to_string(s));
    }
    double u[2] = {0.0, 0.0};
    for (int a = 0; a < lattice.dims; ++a) u[a] = macros.momentum[a * n_g + s] / rho;
    const double uu = u[0] * u[0] + u[1] * u[1];
    for (int i = 0; i < lattice.n_e; ++i) {
      const double eu = lattice.velocities[i][0] * u[0] + lattice.velocities[i][1] * u[1];
      out[static_cast<std::size_t>(i) * n_g + s] =
          lattice.weight(i) * rho *
          (1.0 + eu * inv_cs2 + 0.5 * eu * eu * inv_cs2 * inv_cs2 - 0.5 * uu * inv_cs2);
    }
  }
  return feq;
}

PdfField collide_bgk(const PdfField& f, double tau) {
  require_stable(tau);
  const PdfField feq = equilibrium(moments(f), f.lattice(), f.grid());
  const double omega = 1.0 / tau;
  PdfField post(f.lattice(), f.grid());
  auto out = post.data();
  const auto in = f.data();
  const auto eq = feq.data();
  for (std::size_t n = 0; n < in.size(); ++n) out[n] = in[n] - omega * (in[n] - eq[n]);
  return post;
}

PdfField collide_quadratic(const PdfField& f, const BetaTensor& beta, InverseRhoMode mode) {
  require_stable(beta.tau());
  const int n_e = f.lattice().n_e;
  if (beta.n_e() != n_e) throw DimensionError("beta tensor does not match the field lattice");

  const std::size_t n_g = f.n_g();
  PdfField post(f.lattice(), f.grid());
  auto out = post.data();
  const auto in = f.data();
  std::vector<double> site(n_e);
  for (std::size_t s = 0; s < n_g; ++s) {
    double rho = 0.0;
    for (int i = 0; i < n_e; ++i) {
      site[i] = in[static_cast<std::size_t>(i) * n_g + s];
      rho += site[i];
    }
    double scale = 0.0;
    if (mode == InverseRhoMode::exact) {
      if (!(rho > 0.0)) {
        throw std::domain_error("quadratic collision with exact 1/rho needs rho > 0, got " +
                                std::to_string(rho));
      }
      scale = 1.0 / rho;
    } else {
      scale = 2.0 - rho;
    }
    for (int r = 0; r < n_e; ++r) {
      double acc = 0.0;
      for (int j = 0; j < n_e; ++j) {
        double inner = 0.0;
        for (int k = j; k < n_e; ++k) inner += beta(r, j, k) * site[k];
        acc += site[j] * inner;
      }
      out[static_cast<std::size_t>(r) * n_g + s] = scale * acc;
    }
  }
  if (mode == InverseRhoMode::linear_2_minus_rho) warn_if_nonpositive(post, "(2 - rho) collision");
  return post;
}

std::vector<std::size_t> streaming_sources(const LatticeModel& lattice, const Grid& grid) {
  grid.validate();
  const std::size_t n_g = grid.n_g();
  std::vector<std::size_t> sources(static_cast<std::size_t>(lattice.n_e) * n_g);
  const auto wrap = [](int v, int n) { return ((v % n) + n) % n; };

  for (int i = 0; i < lattice.n_e; ++i) {
    const int ex = lattice.velocities[i][0];
    const int ey = lattice.velocities[i][1];
    for (int y = 0; y < grid.ny; ++y) {
      for (int x = 0; x < grid.nx; ++x) {
        int sx = x - ex;
        int sy = y - ey;
        bool reflected = false;
        if (sx < 0 || sx >= grid.nx) {
          if (grid.boundary_x == Boundary::bounce_back) reflected = true;
          sx = wrap(sx, grid.nx);
        }
        if (sy < 0 || sy >= grid.ny) {
          if (grid.boundary_y == Boundary::bounce_back) reflected = true;
          sy = wrap(sy, grid.ny);
        }
        const std::size_t dest = x + static_cast<std::size_t>(y) * grid.nx + i * n_g;
        if (reflected) {
          sources[dest] = x + static_cast<std::size_t>(y) * grid.nx +
                          static_cast<std::size_t>(lattice.reflect[i]) * n_g;
        } else {
          sources[dest] = sx + static_cast<std::size_t>(sy) * grid.nx + i * n_g;
        }
      }
    }
  }
  return sources;
}

PdfField stream(const PdfField& f) {
  const auto sources = streaming_sources(f.lattice(), f.grid());
  PdfField next(f.lattice(), f.grid());
  auto out = next.data();
  const auto in = f.data();
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = in[sources[n]];
  return next;
}

PdfField step(const PdfField& f, const BetaTensor& beta, CollisionMode mode) {
  switch (mode) {
    case CollisionMode::bgk:
      return stream(collide_bgk(f, beta.tau()));
    case CollisionMode::quadratic_exact:
      return stream(collide_quadratic(f, beta, InverseRhoMode::exact));
    case CollisionMode::quadratic_linear:
      return stream(collide_quadratic(f, beta, InverseRhoMode::linear_2_minus_rho));
  }
  throw std::invalid_argument("unknown collision mode");
}

PdfField step(const PdfField& f, double tau, CollisionMode mode) {
  if (mode == CollisionMode::bgk) return stream(collide_bgk(f, tau));
  return step(f, beta(alpha(f.lattice()), tau), mode);
}

}  // namespace qlbm
