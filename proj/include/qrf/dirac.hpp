#pragma once

// Constraint-solved quantum states of three particles on a line. A physical
// state is stored through one reduction: the momentum amplitude of the two
// particles other than the frame particle F, e.g. psi_{BC|A}(p_B, p_C). The
// other reductions follow from the delta on total momentum,
//   psi_{.|G}(p_F, p_O) = psi_{.|F}(p_O, p_G = -p_F - p_O),
// which on a commensurate momentum grid is a permutation of samples.

#include <array>
#include <vector>

#include "qrf/classical.hpp"
#include "qrf/grid.hpp"
#include "qrf/observable.hpp"

namespace qrf::dirac {

/// The two particles other than `frame`, ascending.
std::array<FrameLabel, 2> reduced_labels(FrameLabel frame);
/// The particle that is neither a nor b.
FrameLabel third_label(FrameLabel a, FrameLabel b);

class PhysicalState {
 public:
  /// Wraps a reduced two-axis state; its frame tag picks the reduction. The
  /// axes must be the two non-frame particles on one common grid. The stored
  /// amplitude is in momentum representation with axes in ascending order.
  explicit PhysicalState(const WaveFunction& reduced);

  FrameLabel frame() const { return canonical_.frame(); }
  const WaveFunction& canonical() const { return canonical_; }
  const Grid1D& grid() const { return canonical_.axes().front().grid; }
  PhysicalState normalized() const { return PhysicalState(canonical_.normalized()); }

 private:
  WaveFunction canonical_;
};

/// Same physical state described through another reduction. Exact (sample
/// permutation); throws SameFrame when new_frame is the current frame.
PhysicalState reexpress(const PhysicalState& state, FrameLabel new_frame);

/// Reduced amplitude in `frame` (reexpressing if necessary), momentum representation.
WaveFunction reduction(const PhysicalState& state, FrameLabel frame);

/// Physical inner product, evaluated as the reduced inner product after
/// bringing s2 into s1's frame.
cplx physical_inner_product(const PhysicalState& s1, const PhysicalState& s2);
/// The same product evaluated in an explicitly chosen reduction.
cplx physical_inner_product(const PhysicalState& s1, const PhysicalState& s2, FrameLabel frame);

/// Fixture helpers: the physical state is saved as its canonical reduction
/// with kind "physical-state".
std::string dump(const PhysicalState& state);
PhysicalState parse_physical_state(std::string_view text);

/// Reduced Hamiltonian of frame F on the grid:
///   1/2 sum_a K_aa p_a^2 + K_ab p_a p_b + V(q with q_F = 0),
///   K_aa = 1/m_a + 1/m_F, K_ab = 1/m_F.
/// Kinetic terms act in momentum representation, the potential in position.
class GridHamiltonian {
 public:
  GridHamiltonian(FrameLabel frame, classical::Potential potential, classical::ParticleSystem system);

  FrameLabel frame() const { return frame_; }
  std::array<FrameLabel, 2> labels() const { return labels_; }
  /// Kinetic energy for momenta (p_a, p_b) of labels()[0], labels()[1].
  double kinetic(double p_a, double p_b) const;
  double potential(double q_a, double q_b) const;
  /// Polynomial kinetic part as an observable.
  Observable kinetic_observable() const;

  WaveFunction apply(const WaveFunction& psi) const;
  /// <psi|H|psi> / <psi|psi>.
  double expectation(const WaveFunction& psi) const;
  /// Strang split-step propagation exp(-i H t) with steps of at most dt.
  WaveFunction evolve(const WaveFunction& psi, double t, double dt) const;
  /// Normalised imaginary-time propagation exp(-H tau) with steps of at most dtau.
  WaveFunction relax(const WaveFunction& psi, double tau, double dtau) const;

 private:
  FrameLabel frame_;
  std::array<FrameLabel, 2> labels_;
  classical::Potential v_;
  classical::ParticleSystem system_;
  double k_aa_, k_bb_, k_ab_;

  WaveFunction ordered(const WaveFunction& psi) const;
  WaveFunction split_step(const WaveFunction& psi, double t, double dt, bool imaginary) const;
};

GridHamiltonian reduced_quantum_hamiltonian(FrameLabel frame, const classical::Potential& potential,
                                            const classical::ParticleSystem& system);

/// Dense check of the family T'_k = exp(i q_F (p_O1 + p_O2 + k)) on a small
/// three-axis grid.
struct TrivializationReport {
  double k = 0.0;
  /// max over probe vectors v of |T P T^dag v - (p_F - k) v| / |v|; probes are
  /// drawn from the subspace where the shifted frame momentum does not wrap
  /// around the periodic momentum grid.
  double constraint_residual = 0.0;
  /// |P phi| / |phi| for the assembled three-axis state.
  double annihilation_residual = 0.0;
  /// |(p_F - k) T phi| / |T phi|.
  double transformed_residual = 0.0;
  /// Fidelity of the extracted reduced amplitude with the canonical one.
  double fidelity_to_canonical = 0.0;
  /// Fidelity of the extracted reduced amplitude with the k = 0 extraction.
  double fidelity_to_k0 = 0.0;
  /// max |extracted - canonical| in position representation.
  double max_deviation = 0.0;
  WaveFunction reduced;
};

/// Grids larger than 16 points throw TooLarge; k must be an integer multiple of
/// dp with |k/dp| < n/2, otherwise KOutOfRange.
std::vector<TrivializationReport> trivialization_family_check(const PhysicalState& state,
                                                              const std::vector<double>& ks,
                                                              std::uint64_t probe_seed = 7);
TrivializationReport trivialization_family_check(const PhysicalState& state, double k);

}  // namespace qrf::dirac
