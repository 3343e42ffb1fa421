#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qlbm/lattice.hpp"

namespace qlbm::resources {

// Qubit and CNOT estimates. Arguments are real-valued so grids up to 1e20
// points (n_f ~ 1e21) stay representable; everything is evaluated in log
// space, with an exact power-of-two correction where the operand fits a
// 64-bit mantissa.

/// ceil(log2(x)) for x >= 1.
[[nodiscard]] int ceil_log2(long double x);

/// 2 + ceil(log2 n_f): two block-index qubits plus the computational register.
[[nodiscard]] int qubits_present(double n_f);
/// 2 + ceil(log2(n_f + 1)): register width once the auxiliary slot is encoded.
[[nodiscard]] int qubits_present_padded(double n_f);
[[nodiscard]] double qubits_present_real(double n_f);

/// 1 + ceil(log2(n_f + n_f^2 + ... + n_f^k)), k >= 1.
[[nodiscard]] int qubits_carleman(double n_f, int k);
[[nodiscard]] double qubits_carleman_real(double n_f, int k);

/// log10 of operators * 2^(n_q - 1) (2^n_q - 1) + 2^n_q: a generic n_q-qubit
/// operator per step plus amplitude state preparation.
[[nodiscard]] double log10_cnot(double n_q, double operators_per_step);

/// Decomposition method: 2 n_e + 3 operators per step.
[[nodiscard]] double cnot_per_step(double n_q, int n_e);

/// Second-order Carleman: one operator on 1 + log2(n_f + n_f^2) qubits.
[[nodiscard]] double cnot_carleman2_per_step(double n_q_carleman);

struct ResourceRow {
  double n_g = 0.0;
  double n_f = 0.0;
  double qubits_present_real = 0.0;
  int qubits_present_int = 0;
  int qubits_cl2 = 0;
  int qubits_cl3 = 0;
  double log10_cnot_present = 0.0;
  double log10_cnot_cl2 = 0.0;
};

struct ResourceReport {
  std::string lattice;
  std::vector<ResourceRow> rows;
};

/// Throws std::domain_error for grid sizes outside [10, 1e20].
[[nodiscard]] ResourceReport sweep(const LatticeModel& lattice, std::span<const double> grid_sizes);

/// `points` log-spaced grid sizes in [grid_min, grid_max], rounded to integers.
[[nodiscard]] std::vector<double> log_spaced_grid_sizes(double grid_min, double grid_max,
                                                        int points);

/// CSV: n_g,n_f,qubits_present_real,qubits_present_int,qubits_cl2,qubits_cl3,
///      log10_cnot_present,log10_cnot_cl2
void write_csv(std::ostream& out, const ResourceReport& report);

}  // namespace qlbm::resources
