#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace qlbm {

using Rational = boost::rational<std::int64_t>;

enum class LatticeKind { D1Q3, D2Q9 };

/// Velocity set of a DmQn lattice in lattice units (dx = dt = 1).
///
/// Direction 0 is the rest velocity. Moving directions follow the order
/// axis-positive, axis-negative, then diagonals:
///   D1Q3: 0, +x, -x
///   D2Q9: 0, +x, +y, -x, -y, (+x+y), (-x+y), (-x-y), (+x-y)
/// Operator and field layouts depend on this order.
struct LatticeModel {
  LatticeKind kind{};
  int dims = 0;
  int n_e = 0;
  /// Second component is 0 for 1D lattices.
  std::vector<std::array<int, 2>> velocities;
  std::vector<Rational> weights;
  Rational cs2;
  /// reflect[i] is the index of -e_i.
  std::vector<int> reflect;

  [[nodiscard]] std::string_view name() const noexcept;
  [[nodiscard]] double weight(int i) const { return boost::rational_cast<double>(weights.at(i)); }
  [[nodiscard]] double sound_speed_squared() const { return boost::rational_cast<double>(cs2); }
  [[nodiscard]] int dot(int i, int j) const {
    return velocities[i][0] * velocities[j][0] + velocities[i][1] * velocities[j][1];
  }
};

[[nodiscard]] LatticeModel make_lattice(LatticeKind kind);

/// Accepts "D1Q3"/"D2Q9" (case-insensitive). Throws ValidationError otherwise.
[[nodiscard]] LatticeModel make_lattice(std::string_view name);
[[nodiscard]] LatticeKind parse_lattice_kind(std::string_view name);

}  // namespace qlbm
