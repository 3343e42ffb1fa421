#include "qlbm/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qlbm/errors.hpp"

namespace qlbm {

namespace {

std::vector<int> reflection_map(const std::vector<std::array<int, 2>>& velocities) {
  std::vector<int> reflect(velocities.size(), -1);
  for (std::size_t i = 0; i < velocities.size(); ++i) {
    for (std::size_t j = 0; j < velocities.size(); ++j) {
      if (velocities[j][0] == -velocities[i][0] && velocities[j][1] == -velocities[i][1]) {
        reflect[i] = static_cast<int>(j);
        break;
      }
    }
  }
  return reflect;
}

}  // namespace

std::string_view LatticeModel::name() const noexcept {
  switch (kind) {
    case LatticeKind::D1Q3:
      return "D1Q3";
    case LatticeKind::D2Q9:
      return "D2Q9";
  }
  return "unknown";
}

LatticeModel make_lattice(LatticeKind kind) {
  LatticeModel lat;
  lat.kind = kind;
  lat.cs2 = Rational(1, 3);
  switch (kind) {
    case LatticeKind::D1Q3:
      lat.dims = 1;
      lat.velocities = {{0, 0}, {1, 0}, {-1, 0}};
      lat.weights = {Rational(2, 3), Rational(1, 6), Rational(1, 6)};
      break;
    case LatticeKind::D2Q9:
      lat.dims = 2;
      lat.velocities = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1},
                        {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
      lat.weights = {Rational(4, 9),  Rational(1, 9),  Rational(1, 9),
                     Rational(1, 9),  Rational(1, 9),  Rational(1, 36),
                     Rational(1, 36), Rational(1, 36), Rational(1, 36)};
      break;
    default:
      throw ValidationError("unknown lattice kind");
  }
  lat.n_e = static_cast<int>(lat.velocities.size());
  lat.reflect = reflection_map(lat.velocities);
  return lat;
}

LatticeKind parse_lattice_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "D1Q3") return LatticeKind::D1Q3;
  if (upper == "D2Q9") return LatticeKind::D2Q9;
  throw ValidationError("unknown lattice '" + std::string(name) + "' (expected D1Q3 or D2Q9)");
}

LatticeModel make_lattice(std::string_view name) { return make_lattice(parse_lattice_kind(name)); }

}  // namespace qlbm
