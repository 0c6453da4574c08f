#pragma once

#include <cstdint>
#include <random>

#include "qrf/grid.hpp"

namespace qrf::states {

/// Normalised harmonic-oscillator eigenfunction of width parameter alpha = m omega:
/// psi_n(x) = (alpha/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(alpha) x) exp(-alpha x^2 / 2).
double ho_eigenfunction(unsigned level, double alpha, double x);

/// One-axis eigenstate sampled in position representation.
WaveFunction ho_state(FrameLabel frame, FrameLabel label, const Grid1D& grid, unsigned level, double alpha);

/// Product psi_a(x) psi_b(y) of oscillator eigenstates on two axes, position
/// representation; axes are stored in the given order.
WaveFunction ho_product(FrameLabel frame, FrameLabel label_a, unsigned level_a, double alpha_a,
                        FrameLabel label_b, unsigned level_b, double alpha_b, const Grid1D& grid);

/// (alpha/pi)^{1/4} exp(-alpha (x-x0)^2 / 2 + i k0 x).
cplx gaussian_packet(double x, double alpha, double x0, double k0);

/// Seeded corpus of entangled two-axis states: normalised sums of two or three
/// product Gaussian packets with random complex weights, widths alpha in
/// [1, 3], centres in [-1.5, 1.5] and mean momenta in [-1.5, 1.5]. The
/// parameter ranges keep every state well inside the default 128-point,
/// L = 20 box in both representations, including after a frame switch.
class RandomStates {
 public:
  explicit RandomStates(std::uint64_t seed) : rng_(seed) {}

  /// Position-representation state with axes (label_a, label_b).
  WaveFunction next(FrameLabel frame, FrameLabel label_a, FrameLabel label_b, const Grid1D& grid);
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qrf::states
