#pragma once

// Quantum change of reference frame F -> G for three particles. With O the
// remaining particle, the switch is
//   S = P_{GF} exp(i q_G p_O),
// a shear followed by the parity swap that reflects G's axis and renames it
// F. Coordinates transform as
//   q_O -> q'_O - q'_F,  q_G -> -q'_F,  p_O -> p'_O,  p_G -> -p'_O - p'_F.

#include "qrf/dirac.hpp"
#include "qrf/dynamics.hpp"
#include "qrf/grid.hpp"
#include "qrf/observable.hpp"

namespace qrf {

enum class SwitchBackend {
  compositional,  ///< momentum substitution shared with dirac::reexpress
  parity_shear,   ///< shear phase, axis reflection and relabel
};

struct FrameSwitch {
  FrameLabel from;
  FrameLabel to;
  SwitchBackend backend = SwitchBackend::compositional;

  /// Throws SameFrame when from == to.
  FrameSwitch(FrameLabel from, FrameLabel to, SwitchBackend backend = SwitchBackend::compositional);
  FrameSwitch inverse() const { return FrameSwitch(to, from, backend); }
};

/// Applies the switch to a reduced two-axis state tagged with sw.from
/// (FrameMismatch otherwise). The result has ascending axes and is in
/// position representation if psi was entirely in position representation,
/// otherwise in momentum representation.
WaveFunction switch_frame(const WaveFunction& psi, const FrameSwitch& sw);

/// S O S^dagger as a polynomial in the new frame's operators. Throws
/// UnsupportedObservable if obs refers to particles outside the old reduction.
Observable conjugate_observable(const Observable& obs, const FrameSwitch& sw);

struct CommutationReport {
  /// Fidelity of (evolve in `from`, then switch) with (switch, then evolve in `to`).
  double fidelity = 1.0;
  /// <H_from> on the input and <H_to> on the switched input.
  double energy_from = 0.0;
  double energy_to = 0.0;
  double relative_energy_deviation = 0.0;
};

/// Oscillator system of `params`: psi is reduced in frame sw.from (normally C),
/// evolved for time t with split-step steps of dt.
CommutationReport dynamics_frame_commutation(const WaveFunction& psi, const classical::OscillatorParams& params,
                                             double t, const FrameSwitch& sw, double dt = 1e-3);
CommutationReport dynamics_frame_commutation(const WaveFunction& psi, const classical::OscillatorParams& params,
                                             double t);

}  // namespace qrf
