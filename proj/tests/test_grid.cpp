#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qrf/dense.hpp"
#include "qrf/grid.hpp"
#include "qrf/observable.hpp"
#include "qrf/states.hpp"
#include "support.hpp"

using namespace qrf;
using qrf::testing::Gen;
using qrf::testing::position_axes;

namespace {

double max_diff(const WaveFunction& a, const WaveFunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Grid1D, Layout) {
  const Grid1D g(8, 4.0);
  EXPECT_DOUBLE_EQ(g.dx(), 0.5);
  EXPECT_DOUBLE_EQ(g.dp(), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(g.x(0), -2.0);
  EXPECT_DOUBLE_EQ(g.x(g.origin_index()), 0.0);
  EXPECT_EQ(g.frequency(3), 3);
  EXPECT_EQ(g.frequency(4), -4);
  EXPECT_EQ(g.frequency(7), -1);
  EXPECT_EQ(g.index_of_frequency(-1), 7u);
  EXPECT_EQ(g.index_of_frequency(9), 1u);
  EXPECT_THROW(Grid1D(12, 1.0), InvalidArgument);
  EXPECT_THROW(Grid1D(4, 1.0), InvalidArgument);
  EXPECT_THROW(Grid1D(16, 0.0), InvalidArgument);
}

TEST(WaveFunction, ShapeAndLabels) {
  const Grid1D g(16, 8.0);
  WaveFunction psi(frames::A, position_axes({frames::B, frames::C}, g));
  EXPECT_EQ(psi.rank(), 2u);
  EXPECT_EQ(psi.size(), 256u);
  EXPECT_EQ(psi.stride(0), 16u);
  EXPECT_EQ(psi.axis_index(frames::C), 1u);
  EXPECT_THROW(psi.axis_index(frames::A), UnknownAxis);
  EXPECT_THROW(WaveFunction(frames::A, position_axes({frames::B, frames::B}, g)), AxisClash);
  EXPECT_THROW(psi.normalized(), NumericalFailure);
}

TEST(ChangeRepresentation, GaussianTransform) {
  const Grid1D g(128, 20.0);
  const double alpha = 1.7;
  const auto psi = states::ho_state(frames::C, frames::A, g, 0, alpha);
  const auto mom = change_representation(psi, frames::A, Representation::momentum);
  EXPECT_EQ(mom.axes()[0].rep, Representation::momentum);
  double dev = 0.0;
  for (std::size_t m = 0; m < g.n; ++m) {
    const double p = g.p(m);
    const double expected = std::pow(1.0 / (std::numbers::pi * alpha), 0.25) * std::exp(-p * p / (2 * alpha));
    dev = std::max(dev, std::abs(mom[m] - expected));
  }
  EXPECT_LE(dev, 1e-8);
}

TEST(ChangeRepresentation, UnitaryRoundTrip) {
  Gen gen(1);
  const Grid1D g(64, 16.0);
  for (int k = 0; k < 10; ++k) {
    const auto psi = gen.state(frames::A, position_axes({frames::B, frames::C}, g));
    const auto mom = to_representation(psi, Representation::momentum);
    EXPECT_NEAR(mom.norm(), psi.norm(), 1e-12);
    const auto back = to_representation(mom, Representation::position);
    EXPECT_LE(max_diff(back, psi), 1e-12);
    const auto half = change_representation(psi, frames::C, Representation::momentum);
    EXPECT_NEAR(half.norm(), 1.0, 1e-12);
  }
  EXPECT_THROW(change_representation(gen.state(frames::A, position_axes({frames::B}, g)), frames::C,
                                     Representation::momentum),
               UnknownAxis);
}

TEST(InnerProduct, Properties) {
  Gen gen(2);
  const Grid1D g(128, 20.0);
  const auto psi0 = states::ho_state(frames::C, frames::A, g, 0, 1.0);
  const auto psi1 = states::ho_state(frames::C, frames::A, g, 1, 1.0);
  EXPECT_NEAR(std::abs(inner_product(psi0, psi1)), 0.0, 1e-10);
  EXPECT_NEAR(inner_product(psi0, psi0).real(), 1.0, 1e-12);
  const auto a = gen.state(frames::A, position_axes({frames::B, frames::C}, Grid1D(32, 12.0)));
  const auto b = gen.state(frames::A, position_axes({frames::B, frames::C}, Grid1D(32, 12.0)));
  EXPECT_LE(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 1e-15);
  EXPECT_THROW(inner_product(psi0, states::ho_state(frames::C, frames::A, Grid1D(64, 20.0), 0, 1.0)), GridMismatch);
  EXPECT_THROW(inner_product(psi0, to_representation(psi0, Representation::momentum)), GridMismatch);
  EXPECT_NEAR(fidelity(psi0, to_representation(psi0, Representation::momentum)), 1.0, 1e-12);
}

TEST(Expectation, Moments) {
  const Grid1D g(128, 20.0);
  const double alpha = 2.5;
  const auto psi = states::ho_state(frames::C, frames::A, g, 0, alpha);
  const auto q = Observable::position(frames::A), p = Observable::momentum(frames::A);
  EXPECT_NEAR(expectation(psi, q), 0.0, 1e-10);
  EXPECT_NEAR(expectation(psi, p * p), alpha / 2, 1e-8);
  EXPECT_NEAR(expectation(psi, q * q), 1 / (2 * alpha), 1e-8);
  EXPECT_NEAR(expectation(psi, q * q + 3.0 * (p * p)), 1 / (2 * alpha) + 1.5 * alpha, 1e-8);
  EXPECT_THROW(expectation(psi, Observable::constant(cplx(0, 1)) * q), NonHermitianObservable);
}

TEST(Expectation, CanonicalCommutator) {
  Gen gen(3);
  const Grid1D g(128, 20.0);
  const auto psi = gen.state(frames::A, position_axes({frames::B}, g));
  ASSERT_LE(boundary_ratio(psi), kBoundaryDecay);
  const auto q = Observable::position(frames::B), p = Observable::momentum(frames::B);
  const auto qp = apply(q, apply(p, psi)), pq = apply(p, apply(q, psi));
  cplx c = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) c += std::conj(psi[i]) * (qp[i] - pq[i]) * psi.cell_volume();
  EXPECT_NEAR(c.real(), 0.0, 1e-6);
  EXPECT_NEAR(c.imag(), 1.0, 1e-6);
}

TEST(Expectation, RepresentationIndependent) {
  Gen gen(4);
  const Grid1D g(32, 12.0);
  const auto psi = gen.state(frames::A, position_axes({frames::B}, g));
  const auto p = Observable::momentum(frames::B);
  const auto dense = dense::DenseOperator::from_observable(dense::position_basis(psi), p * p);
  const auto v = dense::to_vector(psi);
  const double via_dense = (v.adjoint() * dense.apply(v))(0).real() * g.dx();
  EXPECT_NEAR(expectation(psi, p * p), via_dense, 1e-8);
}

TEST(ShearPhase, UnitaryAndShifts) {
  Gen gen(5);
  const Grid1D g(64, 16.0);
  const auto psi = gen.state(frames::A, position_axes({frames::B, frames::C}, g));
  const auto s = apply_shear_phase(psi, frames::C, frames::B, +1);
  EXPECT_NEAR(s.norm(), psi.norm(), 1e-12);
  EXPECT_EQ(s.axes()[0].rep, Representation::position);
  EXPECT_THROW(apply_shear_phase(psi, frames::B, frames::B, +1), AxisClash);
  // exp(i q_C p_B) psi(q_B, q_C) = psi(q_B + q_C, q_C) when q_B + q_C stays on the grid
  const std::size_t c = g.origin_index() + 3, b = g.origin_index() - 5;
  const std::size_t flat = b * g.n + c, shifted = (b + 3) * g.n + c;
  EXPECT_NEAR(std::abs(s[flat] - psi[shifted]), 0.0, 1e-10);
  const auto back = apply_shear_phase(s, frames::C, frames::B, -1);
  EXPECT_LE(max_diff(back, psi), 1e-12);
}

TEST(ShearPhase, MatchesDenseExponential) {
  Gen gen(6);
  const Grid1D g(16, 8.0);
  const auto axes = position_axes({frames::B, frames::C}, g);
  const auto qc = dense::DenseOperator::position(axes, frames::C);
  const auto pb = dense::DenseOperator::momentum(axes, frames::B);
  const auto u = (qc * pb).exp(cplx(0.0, 1.0));
  for (int k = 0; k < 5; ++k) {
    WaveFunction psi(frames::A, axes);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
    psi = psi.normalized();
    const auto spectral = apply_shear_phase(psi, frames::C, frames::B, +1);
    EXPECT_LE((dense::to_vector(spectral) - u.apply(dense::to_vector(psi))).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(ShearPhase, CommutesWithPositionMultiplication) {
  Gen gen(7);
  const Grid1D g(32, 12.0);
  const auto psi = gen.state(frames::A, position_axes({frames::B, frames::C}, g));
  auto f = [](double x) { return cplx(std::cos(x), 0.3 * x); };
  const auto a = apply_shear_phase(multiply_axis(psi, frames::C, Representation::position, f), frames::C, frames::B, 1);
  const auto b = multiply_axis(apply_shear_phase(psi, frames::C, frames::B, 1), frames::C, Representation::position, f);
  EXPECT_LE(max_diff(a, b), 1e-12);
}

TEST(Reflect, IndexMap) {
  const Grid1D g(8, 4.0);
  WaveFunction psi(frames::A, position_axes({frames::B}, g));
  for (std::size_t i = 0; i < 8; ++i) psi[i] = static_cast<double>(i);
  const auto r = reflect_axis(psi, frames::B);
  EXPECT_EQ(r[0].real(), 0.0);
  EXPECT_EQ(r[1].real(), 7.0);
  EXPECT_EQ(r[4].real(), 4.0);
  const auto mom = to_representation(psi, Representation::momentum);
  const auto rm = to_representation(reflect_axis(mom, frames::B), Representation::position);
  EXPECT_LE(max_diff(rm, r), 1e-12);
}

TEST(BoundaryRatio, DetectsWideStates) {
  const Grid1D g(128, 20.0);
  EXPECT_LE(boundary_ratio(states::ho_state(frames::C, frames::A, g, 0, 1.0)), kBoundaryDecay);
  EXPECT_GT(boundary_ratio(states::ho_state(frames::C, frames::A, g, 0, 0.05)), kBoundaryDecay);
}
