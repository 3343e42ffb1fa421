#include "qlbm/qlb_operators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "qlbm/classical_lbm.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

namespace {

struct Placement {
  int block_row;
  int block_col;
  const SparseOperator* block;  // nullptr means identity
};

SparseOperator assemble_hat(std::size_t n_b, std::initializer_list<Placement> placements,
                            std::string label) {
  BlockOccupancy occupancy{};
  std::array<std::vector<Placement>, 4> by_row;
  std::size_t reserve = 0;
  for (const auto& p : placements) {
    if (p.block != nullptr && (p.block->n_rows() != n_b || p.block->n_cols() != n_b)) {
      throw DimensionError(label + ": block " + p.block->label() + " is not n_b x n_b");
    }
    occupancy[p.block_row][p.block_col] = true;
    by_row[p.block_row].push_back(p);
    reserve += p.block == nullptr ? n_b : p.block->nnz();
  }
  for (auto& row : by_row) {
    std::sort(row.begin(), row.end(),
              [](const Placement& a, const Placement& b) { return a.block_col < b.block_col; });
  }

  // Emitted in (row, col) order so from_triplets does not need to sort.
  std::vector<Triplet> t;
  t.reserve(reserve);
  for (int br = 0; br < 4; ++br) {
    for (std::size_t local = 0; local < n_b; ++local) {
      const std::size_t row = br * n_b + local;
      for (const auto& p : by_row[br]) {
        const std::size_t col0 = p.block_col * n_b;
        if (p.block == nullptr) {
          t.push_back({row, col0 + local, 1.0});
          continue;
        }
        const auto offsets = p.block->row_offsets();
        const auto cols = p.block->col_indices();
        const auto vals = p.block->values();
        for (std::size_t n = offsets[local]; n < offsets[local + 1]; ++n) {
          t.push_back({row, col0 + cols[n], vals[n]});
        }
      }
    }
  }
  auto op = SparseOperator::from_triplets(4 * n_b, 4 * n_b, std::move(t), std::move(label));
  op.set_block_structure(n_b, occupancy);
  return op;
}

std::size_t block_size_of(const LatticeModel& lattice, const Grid& grid) {
  return static_cast<std::size_t>(lattice.n_e) * grid.n_g() + 1;
}

void check_direction(int direction, int n_e) {
  if (direction < 0 || direction >= n_e) {
    throw std::out_of_range("direction " + std::to_string(direction) + " outside [0, " +
                            std::to_string(n_e) + ")");
  }
}

void check_df(std::span<const double> df, const LatticeModel& lattice, const Grid& grid) {
  if (df.size() != block_size_of(lattice, grid)) {
    throw DimensionError("augmented vector has length " + std::to_string(df.size()) +
                         ", expected n_f + 1 = " + std::to_string(block_size_of(lattice, grid)));
  }
}

std::string indexed(const char* base, int direction) {
  return std::string(base) + "_" + std::to_string(direction + 1);
}

}  // namespace

std::string_view to_string(PlanVariant variant) noexcept {
  return variant == PlanVariant::layout_a ? "layout_a" : "layout_b";
}

PlanVariant parse_variant(std::string_view text) {
  if (text == "a" || text == "layout_a") return PlanVariant::layout_a;
  if (text == "b" || text == "layout_b") return PlanVariant::layout_b;
  throw ValidationError("unknown variant '" + std::string(text) + "' (expected layout_a or layout_b)");
}

std::vector<double> augmented_vector(const PdfField& f) {
  std::vector<double> df(f.values());
  df.push_back(1.0);
  return df;
}

SparseOperator build_W_tilde(const LatticeModel& lattice, const Grid& grid) {
  const std::size_t n_g = grid.n_g();
  const std::size_t n_f = lattice.n_e * n_g;
  std::vector<Triplet> t;
  t.reserve(n_f * (lattice.n_e + 1) + 1);
  for (int r = 0; r < lattice.n_e; ++r) {
    for (std::size_t s = 0; s < n_g; ++s) {
      const std::size_t row = r * n_g + s;
      for (int c = 0; c < lattice.n_e; ++c) t.push_back({row, c * n_g + s, -1.0});
      t.push_back({row, n_f, 2.0});
    }
  }
  t.push_back({n_f, n_f, 1.0});
  return SparseOperator::from_triplets(n_f + 1, n_f + 1, std::move(t), "W_tilde");
}

SparseOperator build_D_tilde(std::span<const double> df) {
  std::vector<Triplet> t;
  t.reserve(df.size());
  for (std::size_t n = 0; n < df.size(); ++n) {
    if (df[n] != 0.0) t.push_back({n, n, df[n]});
  }
  return SparseOperator::from_triplets(df.size(), df.size(), std::move(t), "D_tilde");
}

SparseOperator build_B_tilde(int direction, const BetaTensor& beta, const Grid& grid) {
  const int n_e = beta.n_e();
  check_direction(direction, n_e);
  const std::size_t n_g = grid.n_g();
  const std::size_t n_f = n_e * n_g;
  std::vector<Triplet> t;
  for (int r = 0; r < n_e; ++r) {
    // chi_ic = 0 below the diagonal: only columns c >= i carry beta_ric.
    for (int c = direction; c < n_e; ++c) {
      const double value = beta(r, direction, c);
      if (value == 0.0) continue;
      for (std::size_t s = 0; s < n_g; ++s) t.push_back({r * n_g + s, c * n_g + s, value});
    }
  }
  t.push_back({n_f, n_f, 1.0});
  return SparseOperator::from_triplets(n_f + 1, n_f + 1, std::move(t), indexed("B_tilde", direction));
}

SparseOperator build_F_tilde(int direction, std::span<const double> df,
                             const LatticeModel& lattice, const Grid& grid) {
  check_direction(direction, lattice.n_e);
  check_df(df, lattice, grid);
  const std::size_t n_g = grid.n_g();
  const std::size_t n_f = lattice.n_e * n_g;
  const auto fi = df.subspan(direction * n_g, n_g);
  std::vector<Triplet> t;
  t.reserve(n_f + 1);
  for (int r = 0; r < lattice.n_e; ++r) {
    for (std::size_t s = 0; s < n_g; ++s) {
      if (fi[s] != 0.0) t.push_back({r * n_g + s, r * n_g + s, fi[s]});
    }
  }
  // Auxiliary corner delta_{i1}: only the first product keeps the 1.
  if (direction == 0) t.push_back({n_f, n_f, 1.0});
  return SparseOperator::from_triplets(n_f + 1, n_f + 1, std::move(t), indexed("F_tilde", direction));
}

SparseOperator build_stream_matrix(const LatticeModel& lattice, const Grid& grid) {
  const auto sources = streaming_sources(lattice, grid);
  return SparseOperator::permutation(sources, "S");
}

SparseOperator build_W_hat(const LatticeModel& lattice, const Grid& grid) {
  const auto w = build_W_tilde(lattice, grid);
  const std::size_t n_b = w.n_rows();
  return assemble_hat(n_b, {{0, 0, &w}, {1, 1, &w}, {2, 2, &w}, {3, 3, &w}}, "W_hat");
}

SparseOperator build_D_hat(std::span<const double> df, const LatticeModel& lattice,
                           const Grid& grid) {
  check_df(df, lattice, grid);
  const auto d = build_D_tilde(df);
  return assemble_hat(df.size(), {{0, 0, &d}, {1, 1, &d}, {2, 2, &d}, {3, 3, &d}}, "D_hat");
}

SparseOperator build_B_hat(int direction, const BetaTensor& beta, const Grid& grid,
                           PlanVariant variant) {
  const auto b = build_B_tilde(direction, beta, grid);
  const std::size_t n_b = b.n_rows();
  auto label = indexed("B_hat", direction);
  if (direction == 0) {
    return assemble_hat(n_b, {{0, 0, &b}, {1, 1, nullptr}, {2, 2, nullptr}, {3, 3, nullptr}},
                        std::move(label));
  }
  if (variant == PlanVariant::layout_a) {
    // block 2 <- B~_i * block 3
    return assemble_hat(n_b, {{0, 0, nullptr}, {1, 2, &b}, {2, 2, nullptr}, {3, 3, nullptr}},
                        std::move(label));
  }
  // block 2 <- block 3, block 3 <- B~_i * block 2
  return assemble_hat(n_b, {{0, 0, nullptr}, {1, 2, nullptr}, {2, 1, &b}, {3, 3, nullptr}},
                      std::move(label));
}

SparseOperator build_F_hat(int direction, std::span<const double> df,
                           const LatticeModel& lattice, const Grid& grid, PlanVariant variant) {
  const auto f = build_F_tilde(direction, df, lattice, grid);
  const std::size_t n_b = f.n_rows();
  auto label = indexed("F_hat", direction);
  if (direction == 0) {
    return assemble_hat(n_b, {{0, 0, &f}, {1, 1, nullptr}, {2, 2, nullptr}, {3, 3, nullptr}},
                        std::move(label));
  }
  if (variant == PlanVariant::layout_a) {
    // block 1 += F~_i * block 2, block 2 <- block 3
    return assemble_hat(
        n_b, {{0, 0, nullptr}, {0, 1, &f}, {1, 2, nullptr}, {2, 2, nullptr}, {3, 3, nullptr}},
        std::move(label));
  }
  // block 1 += F~_i * block 3, block 2 <- block 4
  return assemble_hat(
      n_b, {{0, 0, nullptr}, {0, 2, &f}, {1, 3, nullptr}, {2, 2, nullptr}, {3, 3, nullptr}},
      std::move(label));
}

SparseOperator build_S_hat(const LatticeModel& lattice, const Grid& grid) {
  auto sources = streaming_sources(lattice, grid);
  sources.push_back(sources.size());  // S~ = diag(S, 1)
  const auto s_tilde = SparseOperator::permutation(sources, "S_tilde");
  return assemble_hat(s_tilde.n_rows(),
                      {{0, 0, &s_tilde}, {1, 1, nullptr}, {2, 2, nullptr}, {3, 3, nullptr}},
                      "S_hat");
}

OperatorPlan build_plan(const LatticeModel& lattice, const Grid& grid, const BetaTensor& beta,
                        std::span<const double> df, PlanVariant variant) {
  if (beta.n_e() != lattice.n_e) throw DimensionError("beta tensor does not match the lattice");
  check_df(df, lattice, grid);
  OperatorPlan plan;
  plan.variant = variant;
  plan.block_size = df.size();
  plan.operators.reserve(2 * lattice.n_e + 3);
  plan.operators.push_back(build_W_hat(lattice, grid));
  plan.operators.push_back(build_D_hat(df, lattice, grid));
  for (int i = 0; i < lattice.n_e; ++i) {
    plan.operators.push_back(build_B_hat(i, beta, grid, variant));
    plan.operators.push_back(build_F_hat(i, df, lattice, grid, variant));
  }
  plan.operators.push_back(build_S_hat(lattice, grid));
  return plan;
}

}  // namespace qlbm
