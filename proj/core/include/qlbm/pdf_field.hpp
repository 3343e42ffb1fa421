#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "qlbm/lattice.hpp"

namespace qlbm {

enum class Boundary { periodic, bounce_back };

/// Cartesian grid; ny = 1 for 1D. Each axis carries its own boundary type.
struct Grid {
  int nx = 1;
  int ny = 1;
  Boundary boundary_x = Boundary::periodic;
  Boundary boundary_y = Boundary::periodic;

  [[nodiscard]] std::size_t n_g() const noexcept {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }

  /// Throws ValidationError unless nx, ny > 0.
  void validate() const;
};

[[nodiscard]] inline Grid make_grid_1d(int nx, Boundary boundary) {
  return Grid{nx, 1, boundary, Boundary::periodic};
}
[[nodiscard]] inline Grid make_grid_2d(int nx, int ny, Boundary boundary) {
  return Grid{nx, ny, boundary, boundary};
}

/// Distribution functions laid out direction-major:
///   index(i, x, y) = x + y * nx + i * nx * ny
/// which is the row ordering of the streaming permutation.
class PdfField {
 public:
  PdfField(LatticeModel lattice, Grid grid);
  PdfField(LatticeModel lattice, Grid grid, std::vector<double> data);

  [[nodiscard]] const LatticeModel& lattice() const noexcept { return lattice_; }
  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] std::size_t n_g() const noexcept { return grid_.n_g(); }
  [[nodiscard]] std::size_t n_f() const noexcept { return data_.size(); }

  [[nodiscard]] std::size_t index(int i, int x, int y) const noexcept {
    return static_cast<std::size_t>(x) + static_cast<std::size_t>(y) * grid_.nx +
           static_cast<std::size_t>(i) * n_g();
  }
  [[nodiscard]] double& operator()(int i, int x, int y) noexcept { return data_[index(i, x, y)]; }
  [[nodiscard]] double operator()(int i, int x, int y) const noexcept { return data_[index(i, x, y)]; }

  /// Populations of direction i for every site (length n_g).
  [[nodiscard]] std::span<const double> direction(int i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * n_g(), n_g()};
  }

  [[nodiscard]] std::span<double> data() noexcept { return data_; }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }
  [[nodiscard]] std::vector<double>& values() noexcept { return data_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return data_; }

  [[nodiscard]] double total_mass() const noexcept;

  /// Number of entries <= 0. Physical states have none.
  [[nodiscard]] std::size_t count_nonpositive() const noexcept;

 private:
  LatticeModel lattice_;
  Grid grid_;
  std::vector<double> data_;
};

/// Per-site density and momentum; momentum is component-major
/// (momentum[a * n_g + site]).
struct Macros {
  std::vector<double> rho;
  std::vector<double> momentum;
};

/// Snapshot export: CSV (x,y,direction,f) plus a key=value sidecar next to it
/// (`<path>.meta`) holding lattice, nx, ny and step.
void write_field_snapshot(const std::filesystem::path& path, const PdfField& field, long step);

}  // namespace qlbm
