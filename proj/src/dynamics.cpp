#include "qrf/dynamics.hpp"

#include <cmath>
#include <numeric>

namespace qrf::classical {

double OscillatorParams::omega_A() const { return std::sqrt(k_A / m_A); }
double OscillatorParams::omega_B() const { return std::sqrt(k_B / m_B); }

ParticleSystem OscillatorParams::system() const {
  return ParticleSystem::with_masses({m_A, m_B, m_C});
}

Potential OscillatorParams::potential() const { return Potential::oscillators(k_A, k_B); }

void OscillatorParams::validate() const {
  for (double v : {m_A, m_B, m_C, k_A, k_B}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument("oscillator masses and spring constants must be positive");
    }
  }
}

OscillatorParams OscillatorParams::from_frequencies(double omega_A, double omega_B, double A0,
                                                    double B0, double phi_A, double phi_B,
                                                    double m_A, double m_B, double m_C) {
  OscillatorParams p;
  p.m_A = m_A;
  p.m_B = m_B;
  p.m_C = m_C;
  p.k_A = m_A * omega_A * omega_A;
  p.k_B = m_B * omega_B * omega_B;
  p.A0 = A0;
  p.B0 = B0;
  p.phi_A = phi_A;
  p.phi_B = phi_B;
  p.validate();
  return p;
}

std::vector<double> Trajectory::positions(std::size_t label) const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.q[s.slot(label)]);
  return out;
}

std::vector<double> Trajectory::momenta(std::size_t label) const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.p[s.slot(label)]);
  return out;
}

double total_hamiltonian(const ExtendedPhasePoint& x, const Potential& v, double lambda,
                         const ParticleSystem& system) {
  if (system.size() != x.size()) throw InvalidArgument("particle system size mismatch");
  double kinetic = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) kinetic += 0.5 * x.p[i] * x.p[i] / system.masses[i];
  return kinetic + v(x.q) + lambda * total_momentum(x);
}

double total_hamiltonian(const ExtendedPhasePoint& x, const Potential& v, double lambda) {
  return total_hamiltonian(x, v, lambda, ParticleSystem::unit(x.size()));
}

double reduced_hamiltonian(const ReducedPhasePoint& rp, const Potential& v,
                           const ParticleSystem& system) {
  if (system.size() != rp.particle_count()) throw InvalidArgument("particle system size mismatch");
  const double m_frame = system.mass(rp.frame);
  double kinetic = 0.0;
  for (std::size_t a = 0; a < rp.labels.size(); ++a) {
    const double pa = rp.p[a];
    kinetic += 0.5 * (1.0 / system.masses[rp.labels[a]] + 1.0 / m_frame) * pa * pa;
    for (std::size_t b = a + 1; b < rp.labels.size(); ++b) kinetic += pa * rp.p[b] / m_frame;
  }
  return kinetic + v(embed_reduced(rp).q);
}

std::vector<double> reduced_velocity(const ReducedPhasePoint& rp, const ParticleSystem& system) {
  const double m_frame = system.mass(rp.frame);
  const double sum = std::accumulate(rp.p.begin(), rp.p.end(), 0.0);
  std::vector<double> v(rp.p.size());
  for (std::size_t a = 0; a < v.size(); ++a) {
    v[a] = rp.p[a] / system.masses[rp.labels[a]] + sum / m_frame;
  }
  return v;
}

std::vector<double> reduced_gradient(const ReducedPhasePoint& rp, const Potential& v) {
  const auto full = v.gradient(embed_reduced(rp).q);
  std::vector<double> g(rp.labels.size());
  for (std::size_t a = 0; a < g.size(); ++a) g[a] = full[rp.labels[a]];
  return g;
}

namespace {

void kick(ReducedPhasePoint& s, const Potential& v, double tau) {
  const auto g = reduced_gradient(s, v);
  for (std::size_t a = 0; a < g.size(); ++a) s.p[a] -= tau * g[a];
}

void drift(ReducedPhasePoint& s, const ParticleSystem& system, double tau) {
  const auto vel = reduced_velocity(s, system);
  for (std::size_t a = 0; a < vel.size(); ++a) s.q[a] += tau * vel[a];
}

void strang_step(ReducedPhasePoint& s, const Potential& v, const ParticleSystem& system, double tau) {
  kick(s, v, 0.5 * tau);
  drift(s, system, tau);
  kick(s, v, 0.5 * tau);
}

void step(ReducedPhasePoint& s, const Potential& v, const ParticleSystem& system, double tau,
          Splitting scheme) {
  if (scheme == Splitting::strang) {
    strang_step(s, v, system, tau);
    return;
  }
  const double cbrt2 = std::cbrt(2.0);
  const double w1 = 1.0 / (2.0 - cbrt2);
  const double w0 = -cbrt2 / (2.0 - cbrt2);
  strang_step(s, v, system, w1 * tau);
  strang_step(s, v, system, w0 * tau);
  strang_step(s, v, system, w1 * tau);
}

}  // namespace

Trajectory integrate_reduced(const ReducedPhasePoint& initial, const Potential& v,
                             const ParticleSystem& system, double t_final, double dt,
                             Splitting scheme) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidStep("time step must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw InvalidStep("t_final must be non-negative");
  if (system.size() != initial.particle_count()) throw InvalidArgument("particle system size mismatch");

  const auto full_steps = static_cast<std::size_t>(std::floor(t_final / dt + 1e-9));
  const double covered = static_cast<double>(full_steps) * dt;
  const bool partial = t_final - covered > 1e-12 * std::max(1.0, t_final);

  Trajectory traj;
  traj.frame = initial.frame;
  traj.times.reserve(full_steps + 2);
  traj.states.reserve(full_steps + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(initial);

  ReducedPhasePoint state = initial;
  for (std::size_t k = 1; k <= full_steps; ++k) {
    step(state, v, system, dt, scheme);
    traj.times.push_back(static_cast<double>(k) * dt);
    traj.states.push_back(state);
  }
  if (partial) {
    step(state, v, system, t_final - covered, scheme);
    traj.times.push_back(t_final);
    traj.states.push_back(state);
  }
  return traj;
}

std::pair<double, double> analytic_oscillator_frame_C(const OscillatorParams& params, double t) {
  return {params.A0 * std::cos(params.omega_A() * t + params.phi_A),
          params.B0 * std::cos(params.omega_B() * t + params.phi_B)};
}

std::pair<double, double> analytic_oscillator_frame_A(const OscillatorParams& params, double t) {
  const auto [x_A, x_B] = analytic_oscillator_frame_C(params, t);
  return {x_B - x_A, -x_A};
}

ReducedPhasePoint oscillator_initial_state_frame_C(const OscillatorParams& params) {
  params.validate();
  const double wA = params.omega_A();
  const double wB = params.omega_B();
  const double x_A = params.A0 * std::cos(params.phi_A);
  const double x_B = params.B0 * std::cos(params.phi_B);
  const double xi_A = -params.m_A * params.A0 * wA * std::sin(params.phi_A);
  const double xi_B = -params.m_B * params.B0 * wB * std::sin(params.phi_B);
  return ReducedPhasePoint::make(frames::C, 3, {x_A, x_B}, {xi_A, xi_B});
}

AccelerationResidual acceleration_identity_check(const Potential& v, const ReducedPhasePoint& rp,
                                                 double dt) {
  if (rp.particle_count() != 3 || rp.frame != frames::A) {
    throw InvalidArgument("acceleration identity is stated for three particles in frame A");
  }
  if (!(dt > 0.0)) throw InvalidStep("time step must be positive");
  const auto system = ParticleSystem::unit(3);

  // One leapfrog step each way; the displacements are kept separately so the
  // second difference does not cancel against the absolute positions.
  auto displacement = [&](double tau) {
    ReducedPhasePoint s = rp;
    kick(s, v, 0.5 * tau);
    auto vel = reduced_velocity(s, system);
    for (auto& x : vel) x *= tau;
    return vel;
  };
  const auto forward = displacement(dt);
  const auto backward = displacement(-dt);

  const auto g = reduced_gradient(rp, v);  // (d_B V, d_C V)
  const double rhs_B = -2.0 * g[0] - g[1];
  const double rhs_C = -2.0 * g[1] - g[0];
  const double acc_B = (forward[0] + backward[0]) / (dt * dt);
  const double acc_C = (forward[1] + backward[1]) / (dt * dt);
  return {std::abs(acc_B - rhs_B), std::abs(acc_C - rhs_C)};
}

}  // namespace qrf::classical
