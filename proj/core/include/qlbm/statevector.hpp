#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qlbm/coefficients.hpp"
#include "qlbm/pdf_field.hpp"
#include "qlbm/qlb_operators.hpp"

namespace qlbm {

/// Emulated register: two block-index bits select one of four copies of the
/// augmented vector df, the n_q computational bits address an entry of it.
/// Each block is df zero-padded to 2^n_q. Physical values are
/// scale * amplitudes.
struct QlbState {
  std::vector<double> amplitudes;
  double scale = 1.0;
  int n_q = 0;
  std::size_t n_b = 0;
  std::size_t pad = 0;
  LatticeModel lattice;
  Grid grid;

  [[nodiscard]] std::size_t block_stride() const noexcept { return std::size_t{1} << n_q; }
  [[nodiscard]] double norm() const noexcept;
  /// scale * amplitudes of block b (0-based), without padding.
  [[nodiscard]] std::vector<double> physical_block(int b) const;
};

/// When the running product is renormalized. Both give the same physical
/// values up to rounding.
enum class Normalization { per_operator, per_step };

/// ceil(log2(n)), n >= 1.
[[nodiscard]] int ceil_log2(std::size_t n) noexcept;

[[nodiscard]] QlbState encode(const PdfField& f);

/// Applies the operators in order. Operators must be 4 n_b square; padding
/// slots are left untouched. Throws DimensionError on a size mismatch and
/// std::runtime_error when the product has zero (or non-finite) norm.
[[nodiscard]] QlbState apply(QlbState state, std::span<const SparseOperator> operators,
                             Normalization normalization = Normalization::per_operator);
[[nodiscard]] QlbState apply(QlbState state, const OperatorPlan& plan,
                             Normalization normalization = Normalization::per_operator);

/// Reads block 1. Throws LayoutError when the auxiliary slot is not 1 within
/// 1e-9 or a padding slot is nonzero.
[[nodiscard]] PdfField decode(const QlbState& state);

struct StepRecord {
  long step = 0;
  double norm = 0.0;
  double scale = 0.0;
  double total_mass = 0.0;
  double max_abs_rho_minus_1 = 0.0;
};

using StepTrace = std::vector<StepRecord>;

struct RunResult {
  PdfField field;
  StepTrace trace;
};

/// encode -> build_plan -> apply -> decode per step, operators rebuilt from
/// the current field every step. Step 0 of the trace is the initial field.
[[nodiscard]] RunResult run(const PdfField& f0, double tau, long steps, PlanVariant variant,
                            Normalization normalization = Normalization::per_operator);

/// CSV columns step,norm,scale,total_mass,max_abs_rho_minus_1.
void write_trace_csv(std::ostream& out, const StepTrace& trace);

}  // namespace qlbm
