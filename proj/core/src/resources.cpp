#include "qlbm/resources.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qlbm/csv.hpp"

namespace qlbm::resources {

namespace {

constexpr long double kExactLimit = 18446744073709551616.0L;  // 2^64

void require_at_least_one(double n_f) {
  if (!(n_f >= 1.0) || !std::isfinite(n_f)) {
    throw std::domain_error("n_f must be a finite count >= 1");
  }
}

void require_order(int k) {
  if (k < 1) throw std::domain_error("Carleman truncation order must be >= 1");
}

/// log2(n + n^2 + ... + n^k) = k log2 n + log2(1 + n^-1 + ... + n^-(k-1)).
long double log2_power_sum(long double n, int k) {
  long double tail = 0.0L;
  long double term = 1.0L;
  for (int j = 0; j < k; ++j) {
    tail += term;
    term /= n;
  }
  return k * std::log2(n) + std::log2(tail);
}

/// The power sum itself when it is exactly representable, else -1.
long double exact_power_sum(long double n, int k) {
  if (k * std::log2(n) >= 63.0L) return -1.0L;
  long double sum = 0.0L;
  long double power = 1.0L;
  for (int j = 1; j <= k; ++j) {
    power *= n;
    sum += power;
  }
  return sum < kExactLimit ? sum : -1.0L;
}

int ceil_log2_from(long double log2_value, long double exact) {
  int c = static_cast<int>(std::ceil(log2_value));
  if (exact > 0.0L) {
    while (std::ldexp(1.0L, c) < exact) ++c;
    while (c > 0 && std::ldexp(1.0L, c - 1) >= exact) --c;
  }
  return c;
}

}  // namespace

int ceil_log2(long double x) {
  if (!(x >= 1.0L)) throw std::domain_error("ceil_log2 needs x >= 1");
  return ceil_log2_from(std::log2(x), x < kExactLimit ? x : -1.0L);
}

int qubits_present(double n_f) {
  require_at_least_one(n_f);
  return 2 + ceil_log2(static_cast<long double>(n_f));
}

int qubits_present_padded(double n_f) {
  require_at_least_one(n_f);
  return 2 + ceil_log2(static_cast<long double>(n_f) + 1.0L);
}

double qubits_present_real(double n_f) {
  require_at_least_one(n_f);
  return 2.0 + std::log2(n_f);
}

int qubits_carleman(double n_f, int k) {
  require_at_least_one(n_f);
  require_order(k);
  const long double n = n_f;
  return 1 + ceil_log2_from(log2_power_sum(n, k), exact_power_sum(n, k));
}

double qubits_carleman_real(double n_f, int k) {
  require_at_least_one(n_f);
  require_order(k);
  return static_cast<double>(1.0L + log2_power_sum(n_f, k));
}

double log10_cnot(double n_q, double operators_per_step) {
  if (!(n_q >= 1.0)) throw std::domain_error("n_q must be >= 1");
  // ops 2^(q-1) (2^q - 1) + 2^q = 2^(2q) [ (ops/2)(1 - 2^-q) + 2^-q ]
  const long double q = n_q;
  const long double inv = std::exp2(-q);
  const long double bracket = 0.5L * operators_per_step * (1.0L - inv) + inv;
  return static_cast<double>(2.0L * q * std::log10(2.0L) + std::log10(bracket));
}

double cnot_per_step(double n_q, int n_e) { return log10_cnot(n_q, 2.0 * n_e + 3.0); }

double cnot_carleman2_per_step(double n_q_carleman) { return log10_cnot(n_q_carleman, 1.0); }

std::vector<double> log_spaced_grid_sizes(double grid_min, double grid_max, int points) {
  if (!(grid_min > 0.0) || !(grid_max >= grid_min) || points < 1) {
    throw std::domain_error("grid range must satisfy 0 < min <= max with at least one point");
  }
  std::vector<double> sizes;
  sizes.reserve(points);
  const double lo = std::log10(grid_min);
  const double hi = std::log10(grid_max);
  for (int p = 0; p < points; ++p) {
    const double e = points == 1 ? lo : lo + (hi - lo) * p / (points - 1);
    sizes.push_back(std::round(std::pow(10.0, e)));
  }
  return sizes;
}

ResourceReport sweep(const LatticeModel& lattice, std::span<const double> grid_sizes) {
  ResourceReport report;
  report.lattice = std::string(lattice.name());
  for (double n_g : grid_sizes) {
    if (!(n_g >= 10.0) || !(n_g <= 1e20)) {
      throw std::domain_error("grid size " + format_double(n_g) + " outside [1e1, 1e20]");
    }
    ResourceRow row;
    row.n_g = n_g;
    row.n_f = n_g * lattice.n_e;
    row.qubits_present_real = qubits_present_real(row.n_f);
    row.qubits_present_int = qubits_present(row.n_f);
    row.qubits_cl2 = qubits_carleman(row.n_f, 2);
    row.qubits_cl3 = qubits_carleman(row.n_f, 3);
    row.log10_cnot_present = cnot_per_step(row.qubits_present_int, lattice.n_e);
    row.log10_cnot_cl2 = cnot_carleman2_per_step(row.qubits_cl2);
    report.rows.push_back(row);
  }
  return report;
}

void write_csv(std::ostream& out, const ResourceReport& report) {
  out << "n_g,n_f,qubits_present_real,qubits_present_int,qubits_cl2,qubits_cl3,"
         "log10_cnot_present,log10_cnot_cl2\n";
  for (const auto& r : report.rows) {
    out << format_double(r.n_g) << ',' << format_double(r.n_f) << ','
        << format_double(r.qubits_present_real) << ',' << r.qubits_present_int << ','
        << r.qubits_cl2 << ',' << r.qubits_cl3 << ',' << format_double(r.log10_cnot_present)
        << ',' << format_double(r.log10_cnot_cl2) << '\n';
  }
}

}  // namespace qlbm::resources
