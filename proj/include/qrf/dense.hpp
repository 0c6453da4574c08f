#pragma once

// Brute-force matrices over the flattened position basis of a small grid.
// They exist only to cross-check the spectral operations.

#include <Eigen/Dense>
#include <vector>

#include "qrf/grid.hpp"
#include "qrf/observable.hpp"

namespace qrf::dense {

inline constexpr std::size_t kMaxDimension = 4096;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Unitary DFT matrix matching the grid's momentum convention:
/// F_{mj} = n^{-1/2} (-1)^m exp(-2 pi i m j / n).
Matrix dft_matrix(const Grid1D& grid);
/// diag(x_j).
Matrix position_1d(const Grid1D& grid);
/// F^dagger diag(p_m) F.
Matrix momentum_1d(const Grid1D& grid);

class DenseOperator {
 public:
  /// Axes describe the basis; every axis is taken in position representation.
  DenseOperator(std::vector<Axis> basis, Matrix matrix);

  static DenseOperator identity(std::vector<Axis> basis);
  /// Q or P of one axis, tensored with identities elsewhere.
  static DenseOperator position(std::vector<Axis> basis, FrameLabel label);
  static DenseOperator momentum(std::vector<Axis> basis, FrameLabel label);
  /// Weyl-ordered polynomial built from the Q and P matrices.
  static DenseOperator from_observable(std::vector<Axis> basis, const Observable& obs);

  const Matrix& matrix() const { return m_; }
  const std::vector<Axis>& basis() const { return basis_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }

  DenseOperator operator+(const DenseOperator& o) const;
  DenseOperator operator-(const DenseOperator& o) const;
  DenseOperator operator*(const DenseOperator& o) const;
  DenseOperator operator*(cplx c) const;
  DenseOperator adjoint() const;
  /// exp(c * M) by scaling and squaring Pade.
  DenseOperator exp(cplx c = 1.0) const;

  /// Acts on psi's position-representation amplitudes; result in position representation.
  WaveFunction apply(const WaveFunction& psi) const;
  Vector apply(const Vector& v) const { return m_ * v; }

 private:
  std::vector<Axis> basis_;
  Matrix m_;
};

/// Position-representation basis built from the axes' labels and grids.
std::vector<Axis> position_basis(const WaveFunction& psi);
/// Throws TooLarge when the flattened dimension exceeds kMaxDimension.
std::size_t checked_dimension(const std::vector<Axis>& basis);

/// Flattened amplitudes in position representation.
Vector to_vector(const WaveFunction& psi);
WaveFunction from_vector(FrameLabel frame, const std::vector<Axis>& basis, const Vector& v);

}  // namespace qrf::dense
