#pragma once

// Wigner functions (hbar = 1):
//   W(x, xi) = (1/pi) int rho(x + y, x - y) exp(-2 i xi y) dy,
// evaluated on the grid's x samples and on xi_m = m dp / 2, m = -n..n-1, so
// each Wigner cell has area dx * dp / 2.

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "qrf/grid.hpp"

namespace qrf::wigner {

/// Density matrix over a one-axis position grid, stored in the orthonormal
/// basis c_j = psi(x_j) sqrt(dx).
class DensityMatrix {
 public:
  /// Throws InvalidDensityMatrix unless Hermitian (1e-10), unit trace (1e-10)
  /// and positive semidefinite (eigenvalues >= -1e-8).
  DensityMatrix(FrameLabel label, Grid1D grid, Eigen::MatrixXcd coefficients);

  static DensityMatrix pure(const WaveFunction& psi);
  /// Convex combination sum_k w_k rho_k of density matrices on one grid.
  static DensityMatrix mixture(const std::vector<std::pair<double, DensityMatrix>>& parts);

  FrameLabel label() const { return label_; }
  const Grid1D& grid() const { return grid_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  double trace() const;
  double purity() const;
  /// rho(x_i, x_j) = coefficient / dx.
  cplx kernel(std::size_t i, std::size_t j) const { return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / grid_.dx(); }

 private:
  FrameLabel label_;
  Grid1D grid_;
  Eigen::MatrixXcd rho_;
};

/// Reduced state of one axis of a normalised two-axis pure state.
DensityMatrix partial_trace(const WaveFunction& psi, FrameLabel keep);

struct WignerGrid {
  std::vector<double> x;
  std::vector<double> xi;
  std::vector<double> w;  ///< w[i * xi.size() + j] = W(x[i], xi[j])
  double dx = 0.0;
  double dxi = 0.0;

  double at(std::size_t i, std::size_t j) const { return w[i * xi.size() + j]; }
  double cell_area() const { return dx * dxi; }
  double integral() const;
  double max_abs() const;
  double min() const;
  /// (2 pi) * integral of w^2, equal to tr(rho^2).
  double purity() const;
  /// int w dxi for every x, and int w dx for every xi.
  std::vector<double> position_marginal() const;
  std::vector<double> momentum_marginal() const;
  std::size_t rows() const { return x.size(); }
};

/// Empty grid with the sample layout used for a given position grid.
WignerGrid layout(const Grid1D& grid);

/// Discrete Wigner transform: the kernel is band-limited interpolated onto a
/// doubled grid so x +- y stays on samples, then Fourier transformed over the
/// chord y = l dx / 2, l = -n..n-1.
WignerGrid wigner_transform(const DensityMatrix& rho);

/// f^0 = (1/pi) e^{-alpha x^2} e^{-xi^2/alpha},
/// f^1 = (1/pi)(2 alpha x^2 + 2 xi^2/alpha - 1) e^{-alpha x^2} e^{-xi^2/alpha}.
double eigenstate_wigner(unsigned level, double alpha, double x, double xi);
WignerGrid closed_form_eigenstate_wigner(unsigned level, double alpha, const Grid1D& grid);
WignerGrid closed_form_eigenstate_wigner(unsigned level, double alpha, const WignerGrid& like);

/// Analytic negativity volume of f^1: 2 e^{-1/2} - 1.
double first_excited_negativity();

/// Joint Wigner function of B and C seen from A after switching the product
/// state psi_A^{level_A} psi_B^{level_B} out of C's frame:
///   f(q_B, q_C, pi_B, pi_C) = f_A(-q_C, -pi_B - pi_C) f_B(q_B - q_C, pi_B).
/// Evaluated lazily.
class JointWigner {
 public:
  JointWigner(unsigned level_A, unsigned level_B, double alpha_A, double alpha_B);

  double operator()(double q_B, double q_C, double pi_B, double pi_C) const;
  unsigned level_A() const { return level_A_; }
  unsigned level_B() const { return level_B_; }
  double alpha_A() const { return alpha_A_; }
  double alpha_B() const { return alpha_B_; }

  /// Each eigenstate Wigner function is a sum of separable terms
  /// (1/pi) sum_t X_t(x) Y_t(xi); these give the terms.
  struct Separable {
    double (*x)(double alpha, double x);
    double (*xi)(double alpha, double xi);
  };
  static std::vector<Separable> separable_terms(unsigned level);

 private:
  unsigned level_A_, level_B_;
  double alpha_A_, alpha_B_;
};

JointWigner transformed_joint_wigner(unsigned level_A, unsigned level_B, double alpha_A, double alpha_B);

/// Tensor trapezoid quadrature of the joint function over +-10 standard
/// deviations of the integrand in each of the four directions.
double joint_integral(const JointWigner& joint, std::size_t nodes = 32);

/// Marginal over the discarded pair by tensor-product trapezoid quadrature
/// (nodes per direction, windows of +-10 standard deviations around the
/// integrand's centre), sampled on the layout of `like`.
WignerGrid marginal_wigner(const JointWigner& joint, FrameLabel keep, const WignerGrid& like,
                           std::size_t nodes = 64);

/// int max(-w, 0) dx dxi.
double negativity_volume(const WignerGrid& w);

/// max |a - b| pointwise; throws GridMismatch if the layouts differ.
double max_abs_difference(const WignerGrid& a, const WignerGrid& b);

/// Schmidt coefficients (squared singular values of the amplitude matrix), descending.
std::vector<double> schmidt_spectrum(const WaveFunction& psi);
/// Von Neumann entropy in nats of the reduced state of `cut` (either side gives the same).
double entanglement_entropy(const WaveFunction& psi, FrameLabel cut);

/// Closed-form entropy after switching the ground-ground product state, as a
/// function of alpha_A / alpha_B: with nu = sqrt(1 + alpha_B/alpha_A),
/// S = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2).
double switched_ground_entropy(double ratio);

/// CSV with header "x,xi,w", one row per sample, x-major.
std::string to_csv(const WignerGrid& w);
void write_csv(const WignerGrid& w, const std::filesystem::path& path);

}  // namespace qrf::wigner
