#include "qlbm/coefficients.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

AlphaTensor::AlphaTensor(int n_e, std::vector<Rational> exact)
    : n_e_(n_e), exact_(std::move(exact)) {
  if (exact_.size() != static_cast<std::size_t>(n_e) * n_e * n_e) {
    throw DimensionError("alpha tensor needs n_e^3 entries");
  }
  values_.reserve(exact_.size());
  for (const auto& r : exact_) values_.push_back(boost::rational_cast<double>(r));
}

BetaTensor::BetaTensor(int n_e, double tau, std::vector<double> values)
    : n_e_(n_e), tau_(tau), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(n_e) * n_e * n_e) {
    throw DimensionError("beta tensor needs n_e^3 entries");
  }
}

AlphaTensor alpha(const LatticeModel& lattice) {
  const int n = lattice.n_e;
  const Rational inv_cs2 = Rational(1) / lattice.cs2;
  const Rational inv_cs4 = inv_cs2 * inv_cs2;

  std::vector<Rational> exact;
  exact.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const int eij = lattice.dot(i, j);
        const int eik = lattice.dot(i, k);
        const int ejk = lattice.dot(j, k);
        Rational bracket = Rational(2) + inv_cs2 * Rational(eij + eik - ejk) +
                           inv_cs4 * Rational(eij * eik);
        if (j == k) bracket /= 2;
        exact.push_back(lattice.weights[i] * bracket);
      }
    }
  }
  return AlphaTensor(n, std::move(exact));
}

BetaTensor beta(const AlphaTensor& alpha, double tau) {
  if (!(tau >= 0.5)) {
    throw StabilityError("relaxation parameter tau = " + std::to_string(tau) +
                         " is below the BGK stability bound 0.5");
  }
  const int n = alpha.n_e();
  const double omega = 1.0 / tau;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        values.push_back(gamma_indicator(i, j, k) * (1.0 - omega) +
                         chi_indicator(j, k) * omega * alpha(i, j, k));
      }
    }
  }
  return BetaTensor(n, tau, std::move(values));
}

double tau_from_viscosity(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw std::domain_error("viscosity must be positive and finite, got " + std::to_string(nu));
  }
  return 3.0 * nu + 0.5;
}

namespace {

template <typename Tensor>
void write_dense(std::ostream& out, const Tensor& t) {
  out << "i,j,k,value\n";
  for (int i = 0; i < t.n_e(); ++i) {
    for (int j = 0; j < t.n_e(); ++j) {
      for (int k = 0; k < t.n_e(); ++k) {
        out << i << ',' << j << ',' << k << ',' << format_double(t(i, j, k)) << '\n';
      }
    }
  }
}

}  // namespace

void write_tensor_csv(std::ostream& out, const AlphaTensor& alpha) { write_dense(out, alpha); }
void write_tensor_csv(std::ostream& out, const BetaTensor& beta) { write_dense(out, beta); }

}  // namespace qlbm
