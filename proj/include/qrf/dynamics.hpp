#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qrf/classical.hpp"

namespace qrf::classical {

/// Parameters of the oscillator model: A and B attached to C by springs.
struct OscillatorParams {
  double m_A = 1.0;
  double m_B = 1.0;
  double m_C = 1e6;
  double k_A = 1.0;
  double k_B = 1.0;
  double A0 = 1.0;
  double B0 = 1.0;
  double phi_A = 0.0;
  double phi_B = 0.0;

  double omega_A() const;
  double omega_B() const;
  ParticleSystem system() const;
  Potential potential() const;
  void validate() const;

  /// Sets k_i = m_i * omega_i^2 for the requested frequencies.
  static OscillatorParams from_frequencies(double omega_A, double omega_B, double A0, double B0,
                                           double phi_A, double phi_B, double m_A = 1.0,
                                           double m_B = 1.0, double m_C = 1e6);
};

struct Trajectory {
  FrameLabel frame;
  std::vector<double> times;
  std::vector<ReducedPhasePoint> states;

  std::size_t size() const { return times.size(); }
  /// Time series of q for particle `label`.
  std::vector<double> positions(std::size_t label) const;
  std::vector<double> momenta(std::size_t label) const;
};

enum class Splitting {
  strang,    ///< kick-drift-kick leapfrog, second order
  yoshida4,  ///< triple-jump composition of Strang steps, fourth order
};

/// H_tot = sum_i p_i^2 / (2 m_i) + V + lambda * P.
double total_hamiltonian(const ExtendedPhasePoint& x, const Potential& v, double lambda,
                         const ParticleSystem& system);
double total_hamiltonian(const ExtendedPhasePoint& x, const Potential& v, double lambda);

/// Reduced Hamiltonian seen from rp.frame (index F):
///   1/2 sum_{i != F} (1/m_i + 1/m_F) p_i^2 + sum_{i < j; i,j != F} p_i p_j / m_F + V,
/// with V evaluated at the embedded positions (q_F = 0).
double reduced_hamiltonian(const ReducedPhasePoint& rp, const Potential& v,
                           const ParticleSystem& system);

/// dH_red/dp for every reduced coordinate.
std::vector<double> reduced_velocity(const ReducedPhasePoint& rp, const ParticleSystem& system);
/// dV/dq for every reduced coordinate (gradient at the embedded point).
std::vector<double> reduced_gradient(const ReducedPhasePoint& rp, const Potential& v);

/// Integrates Hamilton's equations of the reduced Hamiltonian with a symplectic
/// splitting of kinetic (momentum-only) and potential (position-only) parts.
/// The last step is shortened when t_final is not a multiple of dt.
Trajectory integrate_reduced(const ReducedPhasePoint& initial, const Potential& v,
                             const ParticleSystem& system, double t_final, double dt,
                             Splitting scheme = Splitting::strang);

/// Decoupled-oscillator solution in C's frame: (x_A(t), x_B(t)).
std::pair<double, double> analytic_oscillator_frame_C(const OscillatorParams& params, double t);
/// The same motion in A's frame: (q_B, q_C) = (x_B - x_A, -x_A).
std::pair<double, double> analytic_oscillator_frame_A(const OscillatorParams& params, double t);

/// Initial condition in C's frame matching the analytic solution at t = 0
/// (decoupled limit: xi_i = m_i dx_i/dt).
ReducedPhasePoint oscillator_initial_state_frame_C(const OscillatorParams& params);

struct AccelerationResidual {
  double residual_B = 0.0;
  double residual_C = 0.0;
};

/// Compares accelerations obtained by second-differencing one leapfrog step
/// forward and one backward from `rp` against q''_B = -2 d_B V - d_C V and
/// q''_C = -2 d_C V - d_B V. Requires three unit-mass particles and frame A.
AccelerationResidual acceleration_identity_check(const Potential& v, const ReducedPhasePoint& rp,
                                                 double dt = 1e-3);

}  // namespace qrf::classical
