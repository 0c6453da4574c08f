#include "qrf/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <string>

namespace qrf::dense {

namespace {

Matrix kron_all(const std::vector<Matrix>& factors) {
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    Matrix next = Eigen::kroneckerProduct(out, factors[k]).eval();
    out = std::move(next);
  }
  return out;
}

Matrix embed(const std::vector<Axis>& basis, std::size_t axis_pos, const Matrix& local) {
  std::vector<Matrix> factors;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto n = static_cast<Eigen::Index>(basis[a].grid.n);
    factors.push_back(a == axis_pos ? local : Matrix::Identity(n, n));
  }
  return kron_all(factors);
}

std::size_t find_axis(const std::vector<Axis>& basis, FrameLabel label) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (basis[a].label == label) return a;
  throw UnknownAxis("dense basis has no axis " + label.name());
}

Matrix weyl_1d(const Grid1D& grid, Powers pw) {
  const Matrix Q = position_1d(grid);
  const Matrix P = momentum_1d(grid);
  auto mpow = [](const Matrix& m, unsigned k) {
    Matrix r = Matrix::Identity(m.rows(), m.cols());
    for (unsigned i = 0; i < k; ++i) r = (r * m).eval();
    return r;
  };
  const Matrix Pb = mpow(P, pw.p);
  Matrix out = Matrix::Zero(Q.rows(), Q.cols());
  double binom = 1.0;
  for (unsigned k = 0; k <= pw.q; ++k) {
    out += binom * (mpow(Q, k) * Pb * mpow(Q, pw.q - k));
    binom = binom * (pw.q - k) / (k + 1.0);
  }
  return out * std::ldexp(1.0, -static_cast<int>(pw.q));
}

}  // namespace

Matrix dft_matrix(const Grid1D& grid) {
  const auto n = static_cast<Eigen::Index>(grid.n);
  Matrix F(n, n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index m = 0; m < n; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double arg = -2.0 * std::numbers::pi * static_cast<double>((m * j) % n) / static_cast<double>(n);
      F(m, j) = sign * inv * cplx(std::cos(arg), std::sin(arg));
    }
  }
  return F;
}

Matrix position_1d(const Grid1D& grid) {
  const auto n = static_cast<Eigen::Index>(grid.n);
  Matrix Q = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) Q(j, j) = grid.x(static_cast<std::size_t>(j));
  return Q;
}

Matrix momentum_1d(const Grid1D& grid) {
  const auto n = static_cast<Eigen::Index>(grid.n);
  const Matrix F = dft_matrix(grid);
  Eigen::VectorXcd p(n);
  for (Eigen::Index m = 0; m < n; ++m) p(m) = grid.p(static_cast<std::size_t>(m));
  return F.adjoint() * p.asDiagonal() * F;
}

std::size_t checked_dimension(const std::vector<Axis>& basis) {
  std::size_t d = 1;
  for (const auto& a : basis) d *= a.grid.n;
  if (d > kMaxDimension) {
    throw TooLarge("dense oracle dimension " + std::to_string(d) + " exceeds " + std::to_string(kMaxDimension));
  }
  return d;
}

std::vector<Axis> position_basis(const WaveFunction& psi) {
  std::vector<Axis> basis = psi.axes();
  for (auto& a : basis) a.rep = Representation::position;
  return basis;
}

DenseOperator::DenseOperator(std::vector<Axis> basis, Matrix matrix) : basis_(std::move(basis)), m_(std::move(matrix)) {
  for (auto& a : basis_) a.rep = Representation::position;
  const auto d = static_cast<Eigen::Index>(checked_dimension(basis_));
  if (m_.rows() != d || m_.cols() != d) throw InvalidArgument("dense operator shape does not match its basis");
}

DenseOperator DenseOperator::identity(std::vector<Axis> basis) {
  const auto d = static_cast<Eigen::Index>(checked_dimension(basis));
  return DenseOperator(std::move(basis), Matrix::Identity(d, d));
}

DenseOperator DenseOperator::position(std::vector<Axis> basis, FrameLabel label) {
  checked_dimension(basis);
  const std::size_t a = find_axis(basis, label);
  Matrix m = embed(basis, a, position_1d(basis[a].grid));
  return DenseOperator(std::move(basis), std::move(m));
}

DenseOperator DenseOperator::momentum(std::vector<Axis> basis, FrameLabel label) {
  checked_dimension(basis);
  const std::size_t a = find_axis(basis, label);
  Matrix m = embed(basis, a, momentum_1d(basis[a].grid));
  return DenseOperator(std::move(basis), std::move(m));
}

DenseOperator DenseOperator::from_observable(std::vector<Axis> basis, const Observable& obs) {
  const auto d = static_cast<Eigen::Index>(checked_dimension(basis));
  Matrix total = Matrix::Zero(d, d);
  for (const auto& [mono, c] : obs.terms()) {
    std::vector<Matrix> factors;
    for (const auto& a : basis) {
      const auto n = static_cast<Eigen::Index>(a.grid.n);
      factors.push_back(Matrix::Identity(n, n));
    }
    for (const auto& [label, pw] : mono) {
      const std::size_t a = find_axis(basis, FrameLabel(label));
      factors[a] = weyl_1d(basis[a].grid, pw);
    }
    total += c * kron_all(factors);
  }
  return DenseOperator(std::move(basis), std::move(total));
}

DenseOperator DenseOperator::operator+(const DenseOperator& o) const { return DenseOperator(basis_, m_ + o.m_); }
DenseOperator DenseOperator::operator-(const DenseOperator& o) const { return DenseOperator(basis_, m_ - o.m_); }
DenseOperator DenseOperator::operator*(const DenseOperator& o) const { return DenseOperator(basis_, m_ * o.m_); }
DenseOperator DenseOperator::operator*(cplx c) const { return DenseOperator(basis_, m_ * c); }
DenseOperator DenseOperator::adjoint() const { return DenseOperator(basis_, m_.adjoint()); }

DenseOperator DenseOperator::exp(cplx c) const {
  Matrix scaled = m_ * c;
  return DenseOperator(basis_, scaled.exp());
}

WaveFunction DenseOperator::apply(const WaveFunction& psi) const {
  if (position_basis(psi) != basis_) throw GridMismatch("state does not live on the operator's basis");
  return from_vector(psi.frame(), basis_, m_ * to_vector(psi));
}

Vector to_vector(const WaveFunction& psi) {
  const WaveFunction pos = to_representation(psi, Representation::position);
  Vector v(static_cast<Eigen::Index>(pos.size()));
  for (std::size_t i = 0; i < pos.size(); ++i) v(static_cast<Eigen::Index>(i)) = pos[i];
  return v;
}

WaveFunction from_vector(FrameLabel frame, const std::vector<Axis>& basis, const Vector& v) {
  std::vector<Axis> axes = basis;
  for (auto& a : axes) a.rep = Representation::position;
  return WaveFunction(frame, std::move(axes), std::vector<cplx>(v.data(), v.data() + v.size()));
}

}  // namespace qrf::dense
