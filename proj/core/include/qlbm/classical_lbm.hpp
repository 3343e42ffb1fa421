#pragma once

#include <cstddef>
#include <vector>

#include "qlbm/coefficients.hpp"
#include "qlbm/pdf_field.hpp"

namespace qlbm {

enum class InverseRhoMode {
  exact,               ///< 1/rho
  linear_2_minus_rho,  ///< first-order Taylor approximation 2 - rho
};

enum class CollisionMode { bgk, quadratic_exact, quadratic_linear };

[[nodiscard]] Macros moments(const PdfField& f);

/// Second-order equilibrium. Throws std::domain_error on rho <= 0.
[[nodiscard]] PdfField equilibrium(const Macros& macros, const LatticeModel& lattice,
                                   const Grid& grid);

/// f* = f - (f - f_eq) / tau, sitewise.
[[nodiscard]] PdfField collide_bgk(const PdfField& f, double tau);

/// f_i* = s(rho) * sum_{j <= k} beta_ijk f_j f_k with s = 1/rho or 2 - rho.
/// Exact mode throws std::domain_error on rho <= 0.
[[nodiscard]] PdfField collide_quadratic(const PdfField& f, const BetaTensor& beta,
                                         InverseRhoMode mode);

/// Pull-style gather map: destination index -> source index in the
/// direction-major layout. Interior links pull from x - e_i; a link whose
/// source lies beyond a bounce-back wall pulls the reflected population at the
/// same site (halfway bounce-back). Periodic axes wrap.
///
/// This is the single definition of streaming: `stream` gathers through it and
/// the quantum streaming matrix places its ones at (dest, source).
[[nodiscard]] std::vector<std::size_t> streaming_sources(const LatticeModel& lattice,
                                                         const Grid& grid);

[[nodiscard]] PdfField stream(const PdfField& f);

/// stream(collide(f)). Rebuilds beta from tau for the quadratic modes.
[[nodiscard]] PdfField step(const PdfField& f, double tau, CollisionMode mode);
[[nodiscard]] PdfField step(const PdfField& f, const BetaTensor& beta, CollisionMode mode);

}  // namespace qlbm
