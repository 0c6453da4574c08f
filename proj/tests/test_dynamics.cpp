#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qrf/dynamics.hpp"
#include "support.hpp"

using namespace qrf;
using namespace qrf::classical;

namespace {

OscillatorParams fig3(double m_C = 1e9) {
  return OscillatorParams::from_frequencies(1.0, 10.0, 1.0, 1.0, 0.0, std::numbers::pi / 2, 1.0, 1.0, m_C);
}

double max_error_vs_analytic(const OscillatorParams& op, double t_final, double dt, Splitting s) {
  const auto start = classical_frame_switch(oscillator_initial_state_frame_C(op), frames::A);
  const auto traj = integrate_reduced(start, op.potential(), op.system(), t_final, dt, s);
  double err = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto [qB, qC] = analytic_oscillator_frame_A(op, traj.times[i]);
    const auto& st = traj.states[i];
    err = std::max({err, std::abs(st.q[0] - qB), std::abs(st.q[1] - qC)});
  }
  return err;
}

}  // namespace

TEST(TotalHamiltonian, Examples) {
  const auto free = Potential::free();
  EXPECT_DOUBLE_EQ(total_hamiltonian({{0, 0, 0}, {1, 1, -2}}, free, 0.0), 3.0);
  const ExtendedPhasePoint x{{0.1, 0.2, 0.3}, {1.0, 0.5, -1.5}};
  EXPECT_DOUBLE_EQ(total_hamiltonian(x, free, 0.0), total_hamiltonian(x, free, 7.5));
  // lambda = -p_A freezes q_A: dH/dp_A = p_A + lambda
  const auto sys = ParticleSystem::unit(3);
  const double h = 1e-6, lambda = -x.p[0];
  auto up = x, down = x;
  up.p[0] += h;
  down.p[0] -= h;
  const double qdot = (total_hamiltonian(up, free, lambda, sys) - total_hamiltonian(down, free, lambda, sys)) / (2 * h);
  EXPECT_NEAR(qdot, 0.0, 1e-8);
}

TEST(ReducedHamiltonian, Examples) {
  const auto sys = ParticleSystem::unit(3);
  const auto free = Potential::free();
  EXPECT_DOUBLE_EQ(reduced_hamiltonian(ReducedPhasePoint::make(frames::A, 3, {0, 0}, {1, 1}), free, sys), 3.0);
  EXPECT_DOUBLE_EQ(reduced_hamiltonian(ReducedPhasePoint::make(frames::A, 3, {0.3, 2}, {0, 0}), free, sys), 0.0);

  const auto heavy = ParticleSystem::with_masses({1e12, 1.0, 1.0});
  const auto v = Potential::oscillators(1.0, 2.0);
  const auto rp = ReducedPhasePoint::make(frames::A, 3, {0.5, -0.25}, {0.7, -1.1});
  const auto x = embed_reduced(rp);
  const double expected = 0.5 * (0.7 * 0.7 + 1.1 * 1.1) + v(x.q);
  EXPECT_NEAR(reduced_hamiltonian(rp, v, heavy), expected, 1e-9 * expected);
}

TEST(ReducedHamiltonian, EqualsTotalOnEmbedding) {
  qrf::testing::Gen g(5);
  const auto sys = ParticleSystem::with_masses({1.0, 2.0, 3.0});
  const auto v = Potential::oscillators(1.5, 0.5);
  for (int k = 0; k < 50; ++k) {
    const auto rp = g.reduced(FrameLabel(g.index(3)), 3);
    EXPECT_NEAR(reduced_hamiltonian(rp, v, sys), total_hamiltonian(embed_reduced(rp), v, 0.0, sys), 1e-10);
  }
}

TEST(Integrator, FreeFlowIsExact) {
  const auto sys = ParticleSystem::unit(3);
  const auto start = ReducedPhasePoint::make(frames::A, 3, {0.5, -1.0}, {0.25, 0.75});
  const auto traj = integrate_reduced(start, Potential::free(), sys, 3.0, 0.125);
  ASSERT_EQ(traj.size(), 25u);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    EXPECT_NEAR(traj.states[i].q[0], 0.5 + (2 * 0.25 + 0.75) * t, 1e-13);
    EXPECT_NEAR(traj.states[i].q[1], -1.0 + (2 * 0.75 + 0.25) * t, 1e-13);
  }
}

TEST(Integrator, RejectsBadSteps) {
  const auto start = ReducedPhasePoint::make(frames::A, 3, {0, 0}, {0, 0});
  const auto sys = ParticleSystem::unit(3);
  EXPECT_THROW(integrate_reduced(start, Potential::free(), sys, 1.0, 0.0), InvalidStep);
  EXPECT_THROW(integrate_reduced(start, Potential::free(), sys, 1.0, -1e-3), InvalidStep);
}

TEST(Integrator, ShortensLastStep) {
  const auto start = ReducedPhasePoint::make(frames::A, 3, {0, 0}, {1, 0});
  const auto traj = integrate_reduced(start, Potential::free(), ParticleSystem::unit(3), 1.0, 0.3);
  ASSERT_EQ(traj.size(), 5u);
  EXPECT_DOUBLE_EQ(traj.times.back(), 1.0);
  for (std::size_t i = 1; i < traj.size(); ++i) EXPECT_GT(traj.times[i], traj.times[i - 1]);
}

TEST(Integrator, MatchesAnalyticFigureParameters) {
  EXPECT_LE(max_error_vs_analytic(fig3(), 20.0, 1e-3, Splitting::yoshida4), 1e-4);
  const auto fig4 = OscillatorParams::from_frequencies(10.0, 1.0, 0.3, 1.0, 0.0, std::numbers::pi / 2, 1.0, 1.0, 1e9);
  EXPECT_LE(max_error_vs_analytic(fig4, 20.0, 1e-3, Splitting::yoshida4), 1e-4);
}

TEST(Integrator, StrangIsSecondOrder) {
  const auto op = OscillatorParams::from_frequencies(1.0, 2.0, 1.0, 0.5, 0.3, 0.0, 1.0, 1.0, 1e12);
  const double e1 = max_error_vs_analytic(op, 5.0, 0.02, Splitting::strang);
  const double e2 = max_error_vs_analytic(op, 5.0, 0.01, Splitting::strang);
  EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(Integrator, EnergyDriftBound) {
  const auto op = fig3(1e6);
  const auto start = classical_frame_switch(oscillator_initial_state_frame_C(op), frames::A);
  const auto v = op.potential();
  const auto sys = op.system();
  const auto traj = integrate_reduced(start, v, sys, 100.0, 1e-3, Splitting::yoshida4);
  const double h0 = reduced_hamiltonian(traj.states.front(), v, sys);
  double drift = 0.0;
  for (const auto& s : traj.states) drift = std::max(drift, std::abs(reduced_hamiltonian(s, v, sys) - h0));
  EXPECT_LE(drift / std::abs(h0), 1e-6);
}

TEST(Integrator, CommutesWithFrameSwitch) {
  const auto op = OscillatorParams::from_frequencies(1.3, 0.7, 0.8, 1.1, 0.2, 1.0, 1.0, 2.0, 3.0);
  const auto v = op.potential();
  const auto sys = op.system();
  const auto c0 = oscillator_initial_state_frame_C(op);
  const auto in_C = integrate_reduced(c0, v, sys, 5.0, 1e-3, Splitting::yoshida4);
  const auto in_A = integrate_reduced(classical_frame_switch(c0, frames::A), v, sys, 5.0, 1e-3, Splitting::yoshida4);
  ASSERT_EQ(in_C.size(), in_A.size());
  double err = 0.0;
  for (std::size_t i = 0; i < in_C.size(); ++i) {
    const auto s = classical_frame_switch(in_C.states[i], frames::A);
    for (std::size_t k = 0; k < 2; ++k)
      err = std::max({err, std::abs(s.q[k] - in_A.states[i].q[k]), std::abs(s.p[k] - in_A.states[i].p[k])});
  }
  EXPECT_LE(err, 1e-9);
}

TEST(Analytic, FrameIdentities) {
  const auto op = fig3();
  const auto [qB0, qC0] = analytic_oscillator_frame_A(op, 0.0);
  EXPECT_NEAR(qB0, -1.0, 1e-15);
  EXPECT_EQ(qC0, -1.0);
  const auto [xA0, xB0] = analytic_oscillator_frame_C(
      OscillatorParams::from_frequencies(1.0, 2.0, 0.4, 0.7, 0.0, 0.0), 0.0);
  EXPECT_EQ(xA0, 0.4);
  EXPECT_EQ(xB0, 0.7);
  for (double t = 0.0; t < 20.0; t += 0.37) {
    const auto [xA, xB] = analytic_oscillator_frame_C(op, t);
    const auto [qB, qC] = analytic_oscillator_frame_A(op, t);
    EXPECT_EQ(qB, xB - xA);
    EXPECT_EQ(qC, -xA);
  }
  const auto same = OscillatorParams::from_frequencies(3.0, 3.0, 0.6, 0.6, 0.4, 0.4);
  for (double t = 0.0; t < 20.0; t += 0.1) EXPECT_EQ(analytic_oscillator_frame_A(same, t).first, 0.0);
}

TEST(AccelerationIdentity, FreeAndHarmonic) {
  const auto rp = ReducedPhasePoint::make(frames::A, 3, {0.4, -0.3}, {0.2, 0.5});
  const auto free = acceleration_identity_check(Potential::free(), rp);
  EXPECT_LE(free.residual_B, 1e-10);
  EXPECT_LE(free.residual_C, 1e-10);
  const auto harm = acceleration_identity_check(Potential::oscillators(1.0, 4.0), rp);
  EXPECT_LE(harm.residual_B, 1e-3);
  EXPECT_LE(harm.residual_C, 1e-3);
}

TEST(AccelerationIdentity, FactorTwo) {
  // V depends on q_B only (relative to A): q_B'' = -2 dV/dq_B
  const auto v = Potential::springs({{0, 1, 3.0}});
  const auto rp = ReducedPhasePoint::make(frames::A, 3, {0.5, 0.2}, {0.0, 0.0});
  const auto r = acceleration_identity_check(v, rp, 1e-4);
  EXPECT_LE(r.residual_B, 1e-6);
  EXPECT_LE(r.residual_C, 1e-6);
  EXPECT_THROW(acceleration_identity_check(v, ReducedPhasePoint::make(frames::B, 3, {0, 0}, {0, 0})), InvalidArgument);
}

TEST(OscillatorParams, Validation) {
  OscillatorParams p;
  p.k_A = -1.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_NEAR(OscillatorParams::from_frequencies(2.0, 3.0, 1, 1, 0, 0, 2.0).omega_A(), 2.0, 1e-15);
}
