#include <qlbm/classical_lbm.hpp>
#include <qlbm/coefficients.hpp>
#include <qlbm/errors.hpp>
#include <qlbm/statevector.hpp>

#include <gtest/gtest.h>

#include <test_fields.hpp>

#include <cmath>
#include <sstream>
#include <vector>

namespace qlbm {
namespace {

using testing::max_relative_difference;
using testing::random_positive_field;

TEST(Statevector, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(1024), 10);
  EXPECT_EQ(ceil_log2(1025), 11);
  EXPECT_EQ(ceil_log2(1501), 11);
}

TEST(Statevector, EncodeSizesForFiveHundredCells) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const PdfField f = random_positive_field(lat, make_grid_1d(500, Boundary::bounce_back), 3);
  const QlbState s = encode(f);
  EXPECT_EQ(s.n_b, 1501u);
  EXPECT_EQ(s.n_q, 11);
  EXPECT_EQ(s.pad, 2048u - 1501u);
  EXPECT_EQ(s.amplitudes.size(), 8192u);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  EXPECT_GT(s.scale, 0.0);
  for (int b = 0; b < 4; ++b)
    for (std::size_t p = s.n_b; p < s.block_stride(); ++p)
      EXPECT_EQ(s.amplitudes[b * s.block_stride() + p], 0.0);
}

TEST(Statevector, EncodeDecodeRoundTrip) {
  const LatticeModel lat = make_lattice(LatticeKind::D2Q9);
  const PdfField f = random_positive_field(lat, make_grid_2d(5, 4, Boundary::periodic), 5);
  const PdfField back = decode(encode(f));
  EXPECT_LT(max_relative_difference(back.values(), f.values()), 1e-14);
}

TEST(Statevector, IdentityPlanLeavesStateUnchanged) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const PdfField f = random_positive_field(lat, make_grid_1d(7, Boundary::periodic), 9);
  const QlbState s = encode(f);
  const std::vector<SparseOperator> ops{SparseOperator::identity(4 * s.n_b)};
  const QlbState t = qlbm::apply(s, ops);
  EXPECT_EQ(t.amplitudes, s.amplitudes);
  EXPECT_DOUBLE_EQ(t.scale, s.scale);
}

TEST(Statevector, DimensionMismatchIsRejected) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const QlbState s = encode(random_positive_field(lat, make_grid_1d(3, Boundary::periodic), 1));
  const std::vector<SparseOperator> ops{SparseOperator::identity(8)};
  EXPECT_THROW((void)qlbm::apply(s, ops), DimensionError);
}

TEST(Statevector, ZeroResultIsRejected) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const QlbState s = encode(random_positive_field(lat, make_grid_1d(3, Boundary::periodic), 1));
  const std::vector<SparseOperator> ops{
      SparseOperator::from_triplets(4 * s.n_b, 4 * s.n_b, {}, "zero")};
  EXPECT_THROW((void)qlbm::apply(s, ops), std::runtime_error);
}

TEST(Statevector, StreamingPreservesTheNorm) {
  const LatticeModel lat = make_lattice(LatticeKind::D2Q9);
  const Grid grid = make_grid_2d(4, 4, Boundary::bounce_back);
  const PdfField f = random_positive_field(lat, grid, 13);
  const QlbState s = encode(f);
  const std::vector<SparseOperator> ops{build_S_hat(lat, grid)};
  const QlbState t = qlbm::apply(s, ops);
  EXPECT_NEAR(t.norm(), 1.0, 1e-14);
  EXPECT_NEAR(t.scale, s.scale, 1e-13 * s.scale);
}

class EmulatedStep : public ::testing::TestWithParam<std::tuple<LatticeKind, Boundary, PlanVariant>> {};

TEST_P(EmulatedStep, MatchesClassicalLinearStep) {
  const auto [kind, boundary, variant] = GetParam();
  const LatticeModel lat = make_lattice(kind);
  const Grid grid = lat.dims == 1 ? make_grid_1d(4, boundary) : make_grid_2d(4, 4, boundary);
  const PdfField f = random_positive_field(lat, grid, 61);
  const double tau = 0.6;
  const BetaTensor b = beta(alpha(lat), tau);
  const RunResult r = run(f, tau, 1, variant);
  const PdfField oracle = step(f, b, CollisionMode::quadratic_linear);
  EXPECT_LT(max_relative_difference(r.field.values(), oracle.values()), 1e-12);
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_NEAR(r.trace.back().norm, 1.0, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(
    AllConfigurations, EmulatedStep,
    ::testing::Combine(::testing::Values(LatticeKind::D1Q3, LatticeKind::D2Q9),
                       ::testing::Values(Boundary::periodic, Boundary::bounce_back),
                       ::testing::Values(PlanVariant::layout_a, PlanVariant::layout_b)));

TEST(Statevector, NormalizationPlacementDoesNotChangeThePhysics) {
  const LatticeModel lat = make_lattice(LatticeKind::D2Q9);
  const Grid grid = make_grid_2d(5, 5, Boundary::periodic);
  const PdfField f = random_positive_field(lat, grid, 71);
  const RunResult per_op = run(f, 0.7, 3, PlanVariant::layout_a, Normalization::per_operator);
  const RunResult per_step = run(f, 0.7, 3, PlanVariant::layout_a, Normalization::per_step);
  EXPECT_LT(max_relative_difference(per_op.field.values(), per_step.field.values()), 1e-13);
}

TEST(Statevector, ZeroStepsReturnsTheInput) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const PdfField f = random_positive_field(lat, make_grid_1d(6, Boundary::periodic), 2);
  EXPECT_EQ(run(f, 0.8, 0, PlanVariant::layout_b).field.values(), f.values());
}

TEST(Statevector, MultiStepRunTracksClassicalLoop) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  const Grid grid = make_grid_1d(40, Boundary::bounce_back);
  PdfField f = random_positive_field(lat, grid, 83, 0.001, 0.001);
  const BetaTensor b = beta(alpha(lat), 0.9);
  const RunResult r = run(f, 0.9, 50, PlanVariant::layout_a);
  for (int n = 0; n < 50; ++n) f = step(f, b, CollisionMode::quadratic_linear);
  double diff = 0.0;
  for (std::size_t n = 0; n < f.values().size(); ++n)
    diff = std::max(diff, std::abs(r.field.values()[n] - f.values()[n]));
  EXPECT_LT(diff, 1e-10);
  EXPECT_EQ(r.trace.size(), 51u);
}

TEST(Statevector, CorruptedAuxiliarySlotIsALayoutError) {
  const LatticeModel lat = make_lattice(LatticeKind::D1Q3);
  QlbState s = encode(random_positive_field(lat, make_grid_1d(3, Boundary::periodic), 1));
  s.amplitudes[s.n_b - 1] *= 0.5;
  EXPECT_THROW((void)decode(s), LayoutError);
  QlbState t = encode(random_positive_field(lat, make_grid_1d(3, Boundary::periodic), 1));
  t.amplitudes[s.n_b] = 1e-3;  // padding slot
  EXPECT_THROW((void)decode(t), LayoutError);
}

TEST(Statevector, TraceCsvColumns) {
  std::ostringstream out;
  write_trace_csv(out, StepTrace{{0, 1.0, 2.0, 3.0, 0.5}});
  EXPECT_EQ(out.str(), "step,norm,scale,total_mass,max_abs_rho_minus_1\n0,1,2,3,0.5\n");
}

}  // namespace
}  // namespace qlbm
