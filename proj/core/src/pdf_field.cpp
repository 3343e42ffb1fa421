#include "qlbm/pdf_field.hpp"

#include <ostream>
#include <string>

#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

void Grid::validate() const {
  if (nx <= 0 || ny <= 0) {
    throw ValidationError("grid dimensions must be positive, got " + std::to_string(nx) + "x" +
                          std::to_string(ny));
  }
}

PdfField::PdfField(LatticeModel lattice, Grid grid)
    : lattice_(std::move(lattice)), grid_(grid) {
  grid_.validate();
  data_.assign(static_cast<std::size_t>(lattice_.n_e) * grid_.n_g(), 0.0);
}

PdfField::PdfField(LatticeModel lattice, Grid grid, std::vector<double> data)
    : lattice_(std::move(lattice)), grid_(grid), data_(std::move(data)) {
  grid_.validate();
  if (data_.size() != static_cast<std::size_t>(lattice_.n_e) * grid_.n_g()) {
    throw DimensionError("field data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(static_cast<std::size_t>(lattice_.n_e) * grid_.n_g()));
  }
}

double PdfField::total_mass() const noexcept {
  double sum = 0.0;
  for (double v : data_) sum += v;
  return sum;
}

std::size_t PdfField::count_nonpositive() const noexcept {
  std::size_t n = 0;
  for (double v : data_) n += v <= 0.0 ? 1 : 0;
  return n;
}

void write_field_snapshot(const std::filesystem::path& path, const PdfField& field, long step) {
  const auto& g = field.grid();
  write_file_atomically(path, [&](std::ostream& out) {
    out << "x,y,direction,f\n";
    for (int i = 0; i < field.lattice().n_e; ++i) {
      for (int y = 0; y < g.ny; ++y) {
        for (int x = 0; x < g.nx; ++x) {
          out << x << ',' << y << ',' << i << ',' << format_double(field(i, x, y)) << '\n';
        }
      }
    }
  });
  auto meta = path;
  meta += ".meta";
  write_file_atomically(meta, [&](std::ostream& out) {
    out << "lattice=" << field.lattice().name() << '\n'
        << "nx=" << g.nx << '\n'
        << "ny=" << g.ny << '\n'
        << "step=" << step << '\n';
  });
}

}  // namespace qlbm
