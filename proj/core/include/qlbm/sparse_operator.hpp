#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qlbm {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Which of the 4x4 blocks of a hatted operator may hold nonzeros.
using BlockOccupancy = std::array<std::array<bool, 4>, 4>;

/// Row-compressed sparse matrix. Hatted operators also record their block
/// size n_b = n_f + 1 and 4x4 block occupancy.
class SparseOperator {
 public:
  SparseOperator() = default;

  /// Sorts the triplets by (row, col). Throws DimensionError on out-of-range
  /// indices, duplicate (row, col) pairs or non-finite values.
  static SparseOperator from_triplets(std::size_t n_rows, std::size_t n_cols,
                                      std::vector<Triplet> triplets, std::string label);
  static SparseOperator identity(std::size_t n, std::string label = "I");
  /// Permutation with a 1 at (row, perm[row]).
  static SparseOperator permutation(std::span<const std::size_t> perm, std::string label);

  [[nodiscard]] std::size_t n_rows() const noexcept { return n_rows_; }
  [[nodiscard]] std::size_t n_cols() const noexcept { return n_cols_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

  [[nodiscard]] std::span<const std::size_t> row_offsets() const noexcept { return row_ptr_; }
  [[nodiscard]] std::span<const std::size_t> col_indices() const noexcept { return col_idx_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  [[nodiscard]] std::size_t block_size() const noexcept { return block_size_; }
  [[nodiscard]] const BlockOccupancy& occupancy() const noexcept { return occupancy_; }
  void set_block_structure(std::size_t block_size, const BlockOccupancy& occupancy);

  /// True when every nonzero falls in an occupied block. Non-hatted operators
  /// (block size 0) trivially match.
  [[nodiscard]] bool matches_occupancy() const noexcept;

  /// Entry lookup, 0 when structurally absent.
  [[nodiscard]] double at(std::size_t row, std::size_t col) const;

  void multiply(std::span<const double> x, std::span<double> y) const;
  [[nodiscard]] std::vector<double> operator*(std::span<const double> x) const;
  [[nodiscard]] SparseOperator operator*(const SparseOperator& rhs) const;
  [[nodiscard]] SparseOperator transpose() const;

  [[nodiscard]] std::vector<Triplet> triplets() const;
  [[nodiscard]] bool is_identity() const noexcept;

  /// Dump format: "# label=...", "# n_rows=...", "# n_cols=...",
  /// "# variant=..." header lines, then CSV triples row,col,value.
  void write_dump(std::ostream& out, std::string_view variant) const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
  std::string label_;
  std::size_t block_size_ = 0;
  BlockOccupancy occupancy_{};
};

}  // namespace qlbm
