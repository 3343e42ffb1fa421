#include "qlbm/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

SparseOperator SparseOperator::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                             std::vector<Triplet> triplets, std::string label) {
  const auto row_major = [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  };
  if (!std::is_sorted(triplets.begin(), triplets.end(), row_major)) {
    std::sort(triplets.begin(), triplets.end(), row_major);
  }

  SparseOperator op;
  op.n_rows_ = n_rows;
  op.n_cols_ = n_cols;
  op.label_ = std::move(label);
  op.row_ptr_.assign(n_rows + 1, 0);
  op.col_idx_.reserve(triplets.size());
  op.values_.reserve(triplets.size());

  for (std::size_t n = 0; n < triplets.size(); ++n) {
    const auto& t = triplets[n];
    if (t.row >= n_rows || t.col >= n_cols) {
      throw DimensionError(op.label_ + ": entry (" + std::to_string(t.row) + ", " +
                           std::to_string(t.col) + ") outside " + std::to_string(n_rows) + "x" +
                           std::to_string(n_cols));
    }
    if (!std::isfinite(t.value)) {
      throw DimensionError(op.label_ + ": non-finite value at (" + std::to_string(t.row) + ", " +
                           std::to_string(t.col) + ")");
    }
    if (n > 0 && triplets[n - 1].row == t.row && triplets[n - 1].col == t.col) {
      throw DimensionError(op.label_ + ": duplicate entry (" + std::to_string(t.row) + ", " +
                           std::to_string(t.col) + ")");
    }
    ++op.row_ptr_[t.row + 1];
    op.col_idx_.push_back(t.col);
    op.values_.push_back(t.value);
  }
  for (std::size_t r = 0; r < n_rows; ++r) op.row_ptr_[r + 1] += op.row_ptr_[r];
  return op;
}

SparseOperator SparseOperator::identity(std::size_t n, std::string label) {
  SparseOperator op;
  op.n_rows_ = n;
  op.n_cols_ = n;
  op.label_ = std::move(label);
  op.row_ptr_.resize(n + 1);
  op.col_idx_.resize(n);
  op.values_.assign(n, 1.0);
  for (std::size_t r = 0; r <= n; ++r) op.row_ptr_[r] = r;
  for (std::size_t r = 0; r < n; ++r) op.col_idx_[r] = r;
  return op;
}

SparseOperator SparseOperator::permutation(std::span<const std::size_t> perm, std::string label) {
  std::vector<Triplet> t;
  t.reserve(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) t.push_back({r, perm[r], 1.0});
  return from_triplets(perm.size(), perm.size(), std::move(t), std::move(label));
}

void SparseOperator::set_block_structure(std::size_t block_size, const BlockOccupancy& occupancy) {
  if (block_size * 4 != n_rows_ || n_rows_ != n_cols_) {
    throw DimensionError(label_ + ": hatted operator must be 4*n_b square");
  }
  block_size_ = block_size;
  occupancy_ = occupancy;
}

bool SparseOperator::matches_occupancy() const noexcept {
  if (block_size_ == 0) return true;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) {
      if (!occupancy_[r / block_size_][col_idx_[n] / block_size_]) return false;
    }
  }
  return true;
}

double SparseOperator::at(std::size_t row, std::size_t col) const {
  if (row >= n_rows_ || col >= n_cols_) throw DimensionError(label_ + ": index out of range");
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

void SparseOperator::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != n_cols_ || y.size() != n_rows_) {
    throw DimensionError(label_ + ": cannot multiply " + std::to_string(n_rows_) + "x" +
                         std::to_string(n_cols_) + " by a vector of length " +
                         std::to_string(x.size()));
  }
  for (std::size_t r = 0; r < n_rows_; ++r) {
    double acc = 0.0;
    for (std::size_t n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) acc += values_[n] * x[col_idx_[n]];
    y[r] = acc;
  }
}

std::vector<double> SparseOperator::operator*(std::span<const double> x) const {
  std::vector<double> y(n_rows_);
  multiply(x, y);
  return y;
}

SparseOperator SparseOperator::operator*(const SparseOperator& rhs) const {
  if (n_cols_ != rhs.n_rows_) throw DimensionError(label_ + " * " + rhs.label_ + ": shape mismatch");
  std::vector<Triplet> out;
  std::vector<double> acc(rhs.n_cols_, 0.0);
  std::vector<char> touched(rhs.n_cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    cols.clear();
    for (std::size_t n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) {
      const std::size_t k = col_idx_[n];
      for (std::size_t m = rhs.row_ptr_[k]; m < rhs.row_ptr_[k + 1]; ++m) {
        const std::size_t c = rhs.col_idx_[m];
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
        }
        acc[c] += values_[n] * rhs.values_[m];
      }
    }
    for (std::size_t c : cols) {
      if (acc[c] != 0.0) out.push_back({r, c, acc[c]});
      acc[c] = 0.0;
      touched[c] = 0;
    }
  }
  return from_triplets(n_rows_, rhs.n_cols_, std::move(out), label_ + "*" + rhs.label_);
}

SparseOperator SparseOperator::transpose() const {
  auto t = triplets();
  for (auto& e : t) std::swap(e.row, e.col);
  return from_triplets(n_cols_, n_rows_, std::move(t), label_ + "^T");
}

std::vector<Triplet> SparseOperator::triplets() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) t.push_back({r, col_idx_[n], values_[n]});
  }
  return t;
}

bool SparseOperator::is_identity() const noexcept {
  if (n_rows_ != n_cols_ || values_.size() != n_rows_) return false;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (row_ptr_[r + 1] - row_ptr_[r] != 1 || col_idx_[row_ptr_[r]] != r ||
        values_[row_ptr_[r]] != 1.0) {
      return false;
    }
  }
  return true;
}

void SparseOperator::write_dump(std::ostream& out, std::string_view variant) const {
  out << "# label=" << label_ << '\n'
      << "# n_rows=" << n_rows_ << '\n'
      << "# n_cols=" << n_cols_ << '\n'
      << "# variant=" << variant << '\n'
      << "row,col,value\n";
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) {
      out << r << ',' << col_idx_[n] << ',' << format_double(values_[n]) << '\n';
    }
  }
}

}  // namespace qlbm
