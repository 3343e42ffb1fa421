#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qlbm/coefficients.hpp"
#include "qlbm/pdf_field.hpp"
#include "qlbm/sparse_operator.hpp"

namespace qlbm {

/// Block wiring of the per-direction operators B_i, F_i for i >= 2.
///
/// The state holds four copies of the augmented vector. After D*W every copy
/// holds g = (f (2 - rho), 1); block 1 accumulates sum_i F~_i B~_i g.
///   layout_a: block 2 is scratch (B~_i g), blocks 3 and 4 keep g.
///   layout_b: block 3 is scratch, block 2 is re-seeded from block 4 after
///             every F_i, block 4 keeps g.
/// B_1 and F_1 are block-diagonal in both layouts.
enum class PlanVariant { layout_a, layout_b };

[[nodiscard]] std::string_view to_string(PlanVariant variant) noexcept;
/// "a"/"layout_a"/"b"/"layout_b". Throws ValidationError otherwise.
[[nodiscard]] PlanVariant parse_variant(std::string_view text);

/// df = (f ordered direction-major, 1); length n_b = n_f + 1.
[[nodiscard]] std::vector<double> augmented_vector(const PdfField& f);

/// n_b x n_b building blocks. Directions are 0-based here.
[[nodiscard]] SparseOperator build_W_tilde(const LatticeModel& lattice, const Grid& grid);
[[nodiscard]] SparseOperator build_D_tilde(std::span<const double> df);
[[nodiscard]] SparseOperator build_B_tilde(int direction, const BetaTensor& beta,
                                           const Grid& grid);
[[nodiscard]] SparseOperator build_F_tilde(int direction, std::span<const double> df,
                                           const LatticeModel& lattice, const Grid& grid);
/// Streaming permutation S (n_f x n_f) with its 1 in row `dest` at the pull
/// source of `dest`.
[[nodiscard]] SparseOperator build_stream_matrix(const LatticeModel& lattice, const Grid& grid);

/// 4 n_b x 4 n_b hatted operators.
[[nodiscard]] SparseOperator build_W_hat(const LatticeModel& lattice, const Grid& grid);
/// Throws DimensionError unless df.size() == n_e * n_g + 1.
[[nodiscard]] SparseOperator build_D_hat(std::span<const double> df, const LatticeModel& lattice,
                                         const Grid& grid);
/// Throws std::out_of_range unless 0 <= direction < n_e.
[[nodiscard]] SparseOperator build_B_hat(int direction, const BetaTensor& beta, const Grid& grid,
                                         PlanVariant variant);
[[nodiscard]] SparseOperator build_F_hat(int direction, std::span<const double> df,
                                         const LatticeModel& lattice, const Grid& grid,
                                         PlanVariant variant);
/// diag(S~, I, I, I) with S~ = diag(S, 1).
[[nodiscard]] SparseOperator build_S_hat(const LatticeModel& lattice, const Grid& grid);

/// One time step: [W, D, B_1, F_1, ..., B_ne, F_ne, S], 2 n_e + 3 operators.
struct OperatorPlan {
  std::vector<SparseOperator> operators;
  PlanVariant variant = PlanVariant::layout_a;
  std::size_t block_size = 0;

  [[nodiscard]] std::size_t size() const noexcept { return operators.size(); }
  /// Everything except the trailing streaming operator.
  [[nodiscard]] std::span<const SparseOperator> collision() const noexcept {
    return std::span<const SparseOperator>(operators).first(operators.size() - 1);
  }
};

/// df must be the augmented vector of the current-step field.
[[nodiscard]] OperatorPlan build_plan(const LatticeModel& lattice, const Grid& grid,
                                      const BetaTensor& beta, std::span<const double> df,
                                      PlanVariant variant);

}  // namespace qlbm
