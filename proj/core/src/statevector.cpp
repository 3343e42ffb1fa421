#include "qlbm/statevector.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qlbm/classical_lbm.hpp"
#include "qlbm/csv.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

namespace {

constexpr int kBlocks = 4;
constexpr double kAuxTolerance = 1e-9;

double l2_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

void renormalize(QlbState& state) {
  const double n = l2_norm(state.amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::runtime_error("operator product produced a state with norm " + std::to_string(n) +
                             "; the input is degenerate");
  }
  const double inv = 1.0 / n;
  for (double& a : state.amplitudes) a *= inv;
  state.scale *= n;
}

double max_abs_rho_minus_1(const PdfField& f) {
  const auto m = moments(f);
  double worst = 0.0;
  for (double rho : m.rho) worst = std::max(worst, std::abs(rho - 1.0));
  return worst;
}

}  // namespace

int ceil_log2(std::size_t n) noexcept {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

double QlbState::norm() const noexcept { return l2_norm(amplitudes); }

std::vector<double> QlbState::physical_block(int b) const {
  if (b < 0 || b >= kBlocks) throw std::out_of_range("block index must be in [0, 4)");
  std::vector<double> out(n_b);
  const std::size_t base = b * block_stride();
  for (std::size_t n = 0; n < n_b; ++n) out[n] = scale * amplitudes[base + n];
  return out;
}

QlbState encode(const PdfField& f) {
  const auto df = augmented_vector(f);
  QlbState state;
  state.n_b = df.size();
  state.n_q = ceil_log2(state.n_b);
  state.pad = state.block_stride() - state.n_b;
  state.lattice = f.lattice();
  state.grid = f.grid();
  state.amplitudes.assign(kBlocks * state.block_stride(), 0.0);
  for (int b = 0; b < kBlocks; ++b) {
    std::copy(df.begin(), df.end(), state.amplitudes.begin() + b * state.block_stride());
  }
  state.scale = 1.0;
  renormalize(state);
  return state;
}

QlbState apply(QlbState state, std::span<const SparseOperator> operators,
               Normalization normalization) {
  const std::size_t n_b = state.n_b;
  const std::size_t stride = state.block_stride();
  std::vector<double> next(state.amplitudes.size());

  for (const auto& op : operators) {
    if (op.n_rows() != kBlocks * n_b || op.n_cols() != kBlocks * n_b) {
      throw DimensionError(op.label() + " is " + std::to_string(op.n_rows()) + "x" +
                           std::to_string(op.n_cols()) + ", state needs " +
                           std::to_string(kBlocks * n_b) + " square");
    }
    const auto row_ptr = op.row_offsets();
    const auto cols = op.col_indices();
    const auto vals = op.values();
    const auto& x = state.amplitudes;
    for (int b = 0; b < kBlocks; ++b) {
      for (std::size_t local = 0; local < n_b; ++local) {
        const std::size_t r = b * n_b + local;
        double acc = 0.0;
        for (std::size_t n = row_ptr[r]; n < row_ptr[r + 1]; ++n) {
          const std::size_t c = cols[n];
          acc += vals[n] * x[(c / n_b) * stride + c % n_b];
        }
        next[b * stride + local] = acc;
      }
      for (std::size_t p = n_b; p < stride; ++p) next[b * stride + p] = x[b * stride + p];
    }
    state.amplitudes.swap(next);
    if (normalization == Normalization::per_operator) renormalize(state);
  }
  if (normalization == Normalization::per_step) renormalize(state);
  return state;
}

QlbState apply(QlbState state, const OperatorPlan& plan, Normalization normalization) {
  if (plan.block_size != state.n_b) {
    throw DimensionError("plan block size " + std::to_string(plan.block_size) +
                         " does not match state block size " + std::to_string(state.n_b));
  }
  return apply(std::move(state), std::span<const SparseOperator>(plan.operators), normalization);
}

PdfField decode(const QlbState& state) {
  const std::size_t n_f = state.n_b - 1;
  const double aux = state.scale * state.amplitudes[n_f];
  if (!(std::abs(aux - 1.0) <= kAuxTolerance)) {
    throw LayoutError("auxiliary slot decodes to " + format_double(aux) +
                      " instead of 1; operator block wiring is inconsistent");
  }
  for (int b = 0; b < kBlocks; ++b) {
    for (std::size_t p = state.n_b; p < state.block_stride(); ++p) {
      if (state.amplitudes[b * state.block_stride() + p] != 0.0) {
        throw LayoutError("padding slot " + std::to_string(p) + " of block " +
                          std::to_string(b + 1) + " is nonzero");
      }
    }
  }
  std::vector<double> values(n_f);
  for (std::size_t n = 0; n < n_f; ++n) values[n] = state.scale * state.amplitudes[n];
  return PdfField(state.lattice, state.grid, std::move(values));
}

RunResult run(const PdfField& f0, double tau, long steps, PlanVariant variant,
              Normalization normalization) {
  if (steps < 0) throw ValidationError("steps must be non-negative");
  const auto coeffs = beta(alpha(f0.lattice()), tau);

  RunResult result{f0, {}};
  result.trace.reserve(static_cast<std::size_t>(steps) + 1);
  result.trace.push_back({0, 1.0, 1.0, f0.total_mass(), max_abs_rho_minus_1(f0)});

  for (long s = 1; s <= steps; ++s) {
    const auto df = augmented_vector(result.field);
    const auto plan = build_plan(f0.lattice(), f0.grid(), coeffs, df, variant);
    const auto state = apply(encode(result.field), plan, normalization);
    result.field = decode(state);
    result.trace.push_back({s, state.norm(), state.scale, result.field.total_mass(),
                            max_abs_rho_minus_1(result.field)});
  }
  return result;
}

void write_trace_csv(std::ostream& out, const StepTrace& trace) {
  out << "step,norm,scale,total_mass,max_abs_rho_minus_1\n";
  for (const auto& r : trace) {
    out << r.step << ',' << format_double(r.norm) << ',' << format_double(r.scale) << ','
        << format_double(r.total_mass) << ',' << format_double(r.max_abs_rho_minus_1) << '\n';
  }
}

}  // namespace qlbm
