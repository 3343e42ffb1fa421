#pragma once

#include <iosfwd>
#include <vector>

#include "qlbm/lattice.hpp"

namespace qlbm {

/// Quadratic-form coefficients of the equilibrium distribution:
///
///   f_i^eq = (1/rho) sum_{j <= k} alpha_ijk f_j f_k
///
/// Stored densely for every (i, j, k); consumers apply the j <= k
/// restriction themselves.
class AlphaTensor {
 public:
  AlphaTensor(int n_e, std::vector<Rational> exact);

  [[nodiscard]] int n_e() const noexcept { return n_e_; }
  [[nodiscard]] double operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }
  [[nodiscard]] const Rational& exact(int i, int j, int k) const { return exact_[index(i, j, k)]; }

 private:
  [[nodiscard]] std::size_t index(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(i) * n_e_ + j) * n_e_ + k;
  }

  int n_e_;
  std::vector<Rational> exact_;
  std::vector<double> values_;
};

/// Collision coefficients with dt = 1:
///   beta_ijk = gamma_ijk (1 - 1/tau) + chi_jk alpha_ijk / tau
/// where gamma_ijk = d_ij + d_ik - d_ij d_ik and chi_jk = [j <= k].
///
/// Entries with j > k are kept (gamma can be nonzero there) but must not be
/// consumed: the collision is f_i* = (1/rho) sum_{j <= k} beta_ijk f_j f_k.
class BetaTensor {
 public:
  BetaTensor(int n_e, double tau, std::vector<double> values);

  [[nodiscard]] int n_e() const noexcept { return n_e_; }
  [[nodiscard]] double tau() const noexcept { return tau_; }
  [[nodiscard]] double operator()(int i, int j, int k) const {
    return values_[(static_cast<std::size_t>(i) * n_e_ + j) * n_e_ + k];
  }

 private:
  int n_e_;
  double tau_;
  std::vector<double> values_;
};

[[nodiscard]] AlphaTensor alpha(const LatticeModel& lattice);

/// Throws StabilityError for tau < 0.5.
[[nodiscard]] BetaTensor beta(const AlphaTensor& alpha, double tau);

/// tau = 3 nu + 1/2. Throws std::domain_error for nu <= 0.
[[nodiscard]] double tau_from_viscosity(double nu);

[[nodiscard]] constexpr int gamma_indicator(int i, int j, int k) noexcept {
  const int dij = i == j ? 1 : 0;
  const int dik = i == k ? 1 : 0;
  return dij + dik - dij * dik;
}

[[nodiscard]] constexpr int chi_indicator(int j, int k) noexcept { return j <= k ? 1 : 0; }

/// CSV debug dumps, columns i,j,k,value.
void write_tensor_csv(std::ostream& out, const AlphaTensor& alpha);
void write_tensor_csv(std::ostream& out, const BetaTensor& beta);

}  // namespace qlbm
