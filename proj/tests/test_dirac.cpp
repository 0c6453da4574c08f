#include <gtest/gtest.h>

#include <cmath>

#include "qrf/dirac.hpp"
#include "qrf/dynamics.hpp"
#include "qrf/states.hpp"
#include "support.hpp"

using namespace qrf;
using namespace qrf::dirac;
using qrf::testing::Gen;
using qrf::testing::position_axes;

namespace {

const Grid1D kGrid(128, 20.0);

WaveFunction random_reduced(Gen& gen, FrameLabel frame, const Grid1D& g = kGrid) {
  const auto l = reduced_labels(frame);
  return gen.state(frame, position_axes({l[0], l[1]}, g));
}

}  // namespace

TEST(Labels, ReducedAndThird) {
  EXPECT_EQ(reduced_labels(frames::A)[0], frames::B);
  EXPECT_EQ(reduced_labels(frames::A)[1], frames::C);
  EXPECT_EQ(reduced_labels(frames::B)[1], frames::C);
  EXPECT_EQ(third_label(frames::A, frames::C), frames::B);
  EXPECT_EQ(third_label(frames::C, frames::B), frames::A);
}

TEST(PhysicalState, Validation) {
  Gen gen(40);
  EXPECT_THROW(PhysicalState(gen.state(frames::A, position_axes({frames::A, frames::C}, kGrid))), FrameMismatch);
  const std::vector<Axis> mixed = {{frames::B, kGrid, Representation::position},
                                   {frames::C, Grid1D(64, 20.0), Representation::position}};
  EXPECT_THROW(PhysicalState(gen.state(frames::A, mixed)), GridMismatch);
  // descending axes are accepted and sorted
  const auto psi = gen.state(frames::A, position_axes({frames::C, frames::B}, kGrid));
  const PhysicalState s(psi);
  EXPECT_EQ(s.canonical().axes()[0].label, frames::B);
  EXPECT_EQ(s.canonical().axes()[0].rep, Representation::momentum);
  EXPECT_GE(fidelity(s.canonical(), psi), 1 - 1e-12);
}

TEST(Reexpress, GaussianSubstitution) {
  // psi_{BC|A}(p_B, p_C) = g(p_B) h(p_C)  ->  psi_{AB|C}(p_A, p_B) = g(p_B) h(-p_A - p_B)
  auto g = [](double p) { return std::exp(cplx(-0.5 * (p - 0.4) * (p - 0.4), 0.3 * p)); };
  auto h = [](double p) { return std::exp(cplx(-0.3 * (p + 0.2) * (p + 0.2), -0.1 * p)); };
  const std::vector<Axis> axes = {{frames::B, kGrid, Representation::momentum},
                                  {frames::C, kGrid, Representation::momentum}};
  const auto psi = WaveFunction::sample(frames::A, axes, [&](std::span<const double> p) { return g(p[0]) * h(p[1]); });
  const auto out = reexpress(PhysicalState(psi), frames::C).canonical();
  EXPECT_EQ(out.frame(), frames::C);
  EXPECT_EQ(out.axes()[0].label, frames::A);
  double dev = 0.0;
  for (std::size_t i = 0; i < kGrid.n; ++i)
    for (std::size_t j = 0; j < kGrid.n; ++j) {
      const double pA = kGrid.p(i), pB = kGrid.p(j);
      dev = std::max(dev, std::abs(out[i * kGrid.n + j] - g(pB) * h(-pA - pB)));
    }
  EXPECT_LE(dev, 1e-6);
}

TEST(Reexpress, RoundTripAndInnerProducts) {
  Gen gen(41);
  for (int k = 0; k < 10; ++k) {
    const PhysicalState s1(random_reduced(gen, frames::A)), s2(random_reduced(gen, frames::A));
    const auto c = reexpress(s1, frames::C);
    EXPECT_GE(fidelity(reexpress(c, frames::A).canonical(), s1.canonical()), 1 - 1e-8);
    EXPECT_NEAR(c.canonical().norm(), 1.0, 1e-12);
    const cplx ref = physical_inner_product(s1, s2);
    for (FrameLabel f : {frames::B, frames::C}) EXPECT_LE(std::abs(physical_inner_product(s1, s2, f) - ref), 1e-8);
    EXPECT_LE(std::abs(physical_inner_product(reexpress(s1, frames::B), s2) - ref), 1e-8);
  }
  const PhysicalState s(random_reduced(gen, frames::B));
  EXPECT_THROW(reexpress(s, frames::B), SameFrame);
  EXPECT_NEAR(physical_inner_product(s, s).real(), 1.0, 1e-12);
}

TEST(PhysicalInnerProduct, OrthogonalGaussians) {
  const auto a = states::ho_product(frames::A, frames::B, 0, 1.0, frames::C, 0, 1.0, kGrid);
  const auto b = states::ho_product(frames::A, frames::B, 1, 1.0, frames::C, 0, 1.0, kGrid);
  EXPECT_LE(std::abs(physical_inner_product(PhysicalState(a), PhysicalState(b))), 1e-8);
  EXPECT_LE(std::abs(physical_inner_product(PhysicalState(a), PhysicalState(b), frames::C)), 1e-8);
}

TEST(PhysicalState, FrameInvariantMomentumAndRelativePosition) {
  Gen gen(42);
  const auto psi = random_reduced(gen, frames::A);
  const PhysicalState s(psi);
  const auto in_C = reduction(s, frames::C);
  const auto pB = Observable::momentum(frames::B);
  EXPECT_NEAR(expectation(psi, pB), expectation(in_C, pB), 1e-8);
  // <q_B> in A's frame is <q_B - q_A> through C's reduction
  const auto rel = Observable::position(frames::B) - Observable::position(frames::A);
  EXPECT_NEAR(expectation(psi, Observable::position(frames::B)), expectation(in_C, rel), 1e-6);
}

TEST(GridHamiltonian, FreeMoments) {
  Gen gen(43);
  const auto sys = classical::ParticleSystem::unit(3);
  const GridHamiltonian h(frames::A, classical::Potential::free(), sys);
  const auto psi = random_reduced(gen, frames::A);
  const auto pB = Observable::momentum(frames::B), pC = Observable::momentum(frames::C);
  const double expected = expectation(psi, pB * pB) + expectation(psi, pC * pC) + expectation(psi, pB * pC);
  EXPECT_NEAR(h.expectation(psi), expected, 1e-8);
  EXPECT_NEAR(h.kinetic(1.0, 1.0), 3.0, 1e-15);
  EXPECT_THROW(h.expectation(random_reduced(gen, frames::B)), FrameMismatch);
}

TEST(GridHamiltonian, Hermitian) {
  Gen gen(44);
  const auto op = classical::OscillatorParams::from_frequencies(1.0, 2.0, 1, 1, 0, 0);
  const auto h = reduced_quantum_hamiltonian(frames::A, op.potential(), op.system());
  const auto a = random_reduced(gen, frames::A), b = random_reduced(gen, frames::A);
  EXPECT_LE(std::abs(inner_product(a, h.apply(b)) - inner_product(h.apply(a), b)), 1e-10);
}

TEST(GridHamiltonian, DecoupledGroundEnergy) {
  const auto op = classical::OscillatorParams::from_frequencies(1.0, 2.0, 1, 1, 0, 0, 1.0, 1.0, 1e6);
  const GridHamiltonian h(frames::C, op.potential(), op.system());
  const Grid1D g(64, 16.0);
  const auto guess = states::ho_product(frames::C, frames::A, 0, 0.7, frames::B, 0, 1.5, g);
  const auto ground = h.relax(guess, 20.0, 1e-2);
  EXPECT_NEAR(h.expectation(ground), 1.5, 1.5e-3);
}

TEST(GridHamiltonian, EvolutionIsUnitary) {
  Gen gen(45);
  const auto op = classical::OscillatorParams::from_frequencies(1.0, 2.0, 1, 1, 0, 0);
  const GridHamiltonian h(frames::A, op.potential(), op.system());
  const auto psi = random_reduced(gen, frames::A);
  EXPECT_NEAR(h.evolve(psi, 0.5, 1e-2).norm(), 1.0, 1e-12);
}

TEST(Trivialization, KIndependence) {
  Gen gen(46);
  const Grid1D g(16, 10.0);
  const PhysicalState s(random_reduced(gen, frames::A, g).normalized());
  const double dp = g.dp();
  const auto reports = trivialization_family_check(s, {0.0, dp, 5 * dp, -3 * dp});
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    EXPECT_LE(r.constraint_residual, 1e-8) << "k = " << r.k;
    EXPECT_LE(r.transformed_residual, 1e-8);
    EXPECT_GE(r.fidelity_to_canonical, 1 - 1e-8);
    EXPECT_GE(r.fidelity_to_k0, 1 - 1e-8);
  }
  EXPECT_LE(reports.front().max_deviation, 1e-10);
}

TEST(Trivialization, AnnihilatesUnaliasedState) {
  // zero every sample whose frame momentum -p_B - p_C wraps around the grid
  const Grid1D g(16, 10.0);
  const std::vector<Axis> axes = {{frames::B, g, Representation::momentum}, {frames::C, g, Representation::momentum}};
  auto psi = WaveFunction::sample(frames::A, axes, [](std::span<const double> p) {
    return std::exp(cplx(-0.4 * (p[0] - 0.6) * (p[0] - 0.6) - 0.7 * p[1] * p[1], 0.8 * p[0] * p[1]));
  });
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      const auto f = g.frequency(i) + g.frequency(j);
      if (f <= -static_cast<std::ptrdiff_t>(g.n / 2) || f > static_cast<std::ptrdiff_t>(g.n / 2)) psi[i * g.n + j] = 0.0;
    }
  const auto reports = trivialization_family_check(PhysicalState(psi.normalized()), {0.0, g.dp(), 5 * g.dp()});
  for (const auto& r : reports) {
    EXPECT_LE(r.annihilation_residual, 1e-8);
    EXPECT_LE(r.transformed_residual, 1e-8);
    EXPECT_GE(r.fidelity_to_canonical, 1 - 1e-8);
  }
}

TEST(Trivialization, Errors) {
  Gen gen(47);
  const Grid1D small(16, 10.0);
  const PhysicalState s(random_reduced(gen, frames::A, small));
  EXPECT_THROW(trivialization_family_check(s, 0.5 * small.dp()), KOutOfRange);
  EXPECT_THROW(trivialization_family_check(s, 8 * small.dp()), KOutOfRange);
  const PhysicalState big(random_reduced(gen, frames::A, Grid1D(32, 10.0)));
  EXPECT_THROW(trivialization_family_check(big, 0.0), TooLarge);
}
