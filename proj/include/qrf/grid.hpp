#pragma once

// Wavefunctions on periodic tensor-product grids (one to three axes).
//
// Position samples: x_j = -L/2 + j dx, j = 0..n-1, dx = L/n.
// Momentum samples are kept in DFT order: p_m = f(m) dp with dp = 2 pi / L and
// f(m) = m for m < n/2, m - n otherwise.
//
// Forward transform (position -> momentum) on one axis:
//   psi~_m = dx / sqrt(2 pi) * (-1)^m * sum_j psi_j exp(-2 pi i m j / n)
// which is the Riemann sum of (2 pi)^{-1/2} int psi(x) e^{-i p x} dx. The
// inverse carries dp / sqrt(2 pi). Norms are sum |psi|^2 * cell in either
// representation, with cell = dx or dp per axis.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qrf/frame.hpp"

namespace qrf {

using cplx = std::complex<double>;

struct Grid1D {
  std::size_t n = 128;
  double length = 20.0;

  Grid1D() = default;
  /// Throws InvalidArgument unless n >= 8 is a power of two and length > 0.
  Grid1D(std::size_t n, double length);

  double dx() const { return length / static_cast<double>(n); }
  double dp() const;
  double x(std::size_t j) const { return -0.5 * length + static_cast<double>(j) * dx(); }
  /// Signed integer frequency of DFT-ordered index m.
  std::ptrdiff_t frequency(std::size_t m) const;
  double p(std::size_t m) const { return static_cast<double>(frequency(m)) * dp(); }
  /// Index holding frequency f (taken modulo n).
  std::size_t index_of_frequency(std::ptrdiff_t f) const;
  /// Index of the sample at x = 0.
  std::size_t origin_index() const { return n / 2; }

  std::vector<double> positions() const;
  std::vector<double> momenta() const;

  void validate() const;
  bool operator==(const Grid1D&) const = default;
};

enum class Representation { position, momentum };

const char* to_string(Representation r);

struct Axis {
  FrameLabel label;
  Grid1D grid;
  Representation rep = Representation::position;

  double cell() const { return rep == Representation::position ? grid.dx() : grid.dp(); }
  /// Coordinate value of sample i in the axis' current representation.
  double coordinate(std::size_t i) const { return rep == Representation::position ? grid.x(i) : grid.p(i); }
  bool operator==(const Axis&) const = default;
};

/// Amplitudes over a tensor grid, row-major with the first axis slowest. The
/// frame tag records whose perspective the state describes; axes carry the
/// labels of the particles they belong to.
class WaveFunction {
 public:
  WaveFunction() = default;
  WaveFunction(FrameLabel frame, std::vector<Axis> axes);
  WaveFunction(FrameLabel frame, std::vector<Axis> axes, std::vector<cplx> amplitudes);

  /// Samples f at every grid point; f receives one coordinate per axis in the
  /// axis' representation.
  static WaveFunction sample(FrameLabel frame, std::vector<Axis> axes,
                             const std::function<cplx(std::span<const double>)>& f);

  FrameLabel frame() const { return frame_; }
  const std::vector<Axis>& axes() const { return axes_; }
  const Axis& axis(FrameLabel label) const { return axes_[axis_index(label)]; }
  /// Throws UnknownAxis when no axis carries `label`.
  std::size_t axis_index(FrameLabel label) const;
  bool has_axis(FrameLabel label) const;
  std::size_t rank() const { return axes_.size(); }
  std::size_t size() const { return data_.size(); }
  std::vector<std::size_t> shape() const;
  std::size_t stride(std::size_t axis_pos) const;

  std::span<const cplx> amplitudes() const { return data_; }
  std::span<cplx> amplitudes() { return data_; }
  const cplx& operator[](std::size_t flat) const { return data_[flat]; }
  cplx& operator[](std::size_t flat) { return data_[flat]; }

  double cell_volume() const;
  double norm() const;
  WaveFunction normalized() const;
  bool all_in(Representation r) const;

  void set_frame(FrameLabel f) { frame_ = f; }
  /// Renames and reorders axes; used by frame switches. `order[k]` is the old
  /// axis position that becomes new axis k.
  WaveFunction permuted(std::span<const std::size_t> order) const;
  void relabel_axis(std::size_t axis_pos, FrameLabel label) { axes_[axis_pos].label = label; }

 private:
  FrameLabel frame_{};
  std::vector<Axis> axes_;
  std::vector<cplx> data_;

  void check_axes() const;
};

/// DFT of one axis into `target`; a no-op if it is already there.
WaveFunction change_representation(const WaveFunction& psi, FrameLabel axis, Representation target);
/// Every axis into `target`.
WaveFunction to_representation(const WaveFunction& psi, Representation target);

/// <psi|phi> = sum conj(psi) phi * cell. Throws GridMismatch unless the axes
/// (labels, grids and representations) agree.
cplx inner_product(const WaveFunction& psi, const WaveFunction& phi);

/// |<psi|phi>|^2 / (<psi|psi><phi|phi>), converting phi to psi's representations.
double fidelity(const WaveFunction& psi, const WaveFunction& phi);

/// exp(sign * i * q_pos * p_mom): diagonal when pos_axis is in position and
/// mom_axis in momentum representation. In position space it shifts the
/// mom_axis argument by sign * q_pos. The result keeps psi's representations.
WaveFunction apply_shear_phase(const WaveFunction& psi, FrameLabel pos_axis, FrameLabel mom_axis,
                               int sign);

/// Reflection q -> -q (equivalently p -> -p) on one axis: index i -> (n - i) mod n.
WaveFunction reflect_axis(const WaveFunction& psi, FrameLabel axis);

/// Largest |psi| on the outermost samples of any axis relative to max |psi|,
/// evaluated in position representation.
double boundary_ratio(const WaveFunction& psi);
inline constexpr double kBoundaryDecay = 1e-8;

/// Multiplies by f(x_1, ..., x_rank) evaluated in position representation.
WaveFunction multiply_position(const WaveFunction& psi,
                               const std::function<cplx(std::span<const double>)>& f);
/// Multiplies by g(p_1, ..., p_rank) evaluated in momentum representation.
WaveFunction multiply_momentum(const WaveFunction& psi,
                               const std::function<cplx(std::span<const double>)>& g);
/// Multiplies by h(coordinate) along one axis, taken in representation `rep`;
/// the axis returns to its original representation afterwards.
WaveFunction multiply_axis(const WaveFunction& psi, FrameLabel axis, Representation rep,
                           const std::function<cplx(double)>& h);

}  // namespace qrf
