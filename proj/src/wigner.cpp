#include "qrf/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "fft.hpp"
#include "format.hpp"

namespace qrf::wigner {

namespace {

using std::numbers::pi;

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenTol = 1e-8;
constexpr double kWindowSigmas = 10.0;

void validate_density(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw InvalidDensityMatrix("density matrix must be square");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) throw InvalidDensityMatrix("density matrix is not Hermitian");
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) throw InvalidDensityMatrix("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigenTol) throw InvalidDensityMatrix("density matrix has a negative eigenvalue");
}

// Trapezoid nodes and weights on [c - half, c + half].
struct Rule {
  std::vector<double> t, w;
};

Rule trapezoid(double centre, double half, std::size_t nodes) {
  Rule r;
  const double h = 2.0 * half / static_cast<double>(nodes - 1);
  for (std::size_t k = 0; k < nodes; ++k) {
    r.t.push_back(centre - half + h * static_cast<double>(k));
    r.w.push_back((k == 0 || k + 1 == nodes) ? 0.5 * h : h);
  }
  return r;
}

double gauss_x(double alpha, double x) { return std::exp(-alpha * x * x); }
double gauss_xi(double alpha, double xi) { return std::exp(-xi * xi / alpha); }
double poly_x(double alpha, double x) { return (2.0 * alpha * x * x - 1.0) * std::exp(-alpha * x * x); }
double poly_xi(double alpha, double xi) { return (2.0 * xi * xi / alpha) * std::exp(-xi * xi / alpha); }

}  // namespace

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(FrameLabel label, Grid1D grid, Eigen::MatrixXcd coefficients)
    : label_(label), grid_(grid), rho_(std::move(coefficients)) {
  grid_.validate();
  if (rho_.rows() != static_cast<Eigen::Index>(grid_.n)) throw InvalidDensityMatrix("density matrix size does not match grid");
  validate_density(rho_);
}

DensityMatrix DensityMatrix::pure(const WaveFunction& psi) {
  if (psi.rank() != 1) throw InvalidArgument("pure density matrices are built from one-axis states");
  const WaveFunction pos = to_representation(psi, Representation::position).normalized();
  const Grid1D& g = pos.axes()[0].grid;
  Eigen::VectorXcd c(static_cast<Eigen::Index>(g.n));
  const double s = std::sqrt(g.dx());
  for (std::size_t j = 0; j < g.n; ++j) c(static_cast<Eigen::Index>(j)) = pos[j] * s;
  return DensityMatrix(pos.axes()[0].label, g, c * c.adjoint());
}

DensityMatrix DensityMatrix::mixture(const std::vector<std::pair<double, DensityMatrix>>& parts) {
  if (parts.empty()) throw InvalidArgument("empty mixture");
  const auto& first = parts.front().second;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(first.rho_.rows(), first.rho_.cols());
  for (const auto& [w, rho] : parts) {
    if (rho.grid_ != first.grid_) throw GridMismatch("mixture components live on different grids");
    if (w < 0.0) throw InvalidDensityMatrix("mixture weights must be non-negative");
    sum += w * rho.rho_;
  }
  return DensityMatrix(first.label_, first.grid_, sum);
}

double DensityMatrix::trace() const { return rho_.trace().real(); }
double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

DensityMatrix partial_trace(const WaveFunction& psi, FrameLabel keep) {
  if (psi.rank() != 2) throw InvalidArgument("partial trace needs a two-axis state");
  const WaveFunction pos = to_representation(psi, Representation::position);
  const std::size_t k = pos.axis_index(keep);
  const Grid1D& gk = pos.axes()[k].grid;
  const Grid1D& go = pos.axes()[1 - k].grid;
  const auto nk = static_cast<Eigen::Index>(gk.n), no = static_cast<Eigen::Index>(go.n);
  const double s = std::sqrt(gk.dx() * go.dx());
  Eigen::MatrixXcd M(nk, no);
  for (Eigen::Index i = 0; i < nk; ++i)
    for (Eigen::Index j = 0; j < no; ++j) {
      const std::size_t flat = k == 0 ? static_cast<std::size_t>(i * no + j) : static_cast<std::size_t>(j * nk + i);
      M(i, j) = pos[flat] * s;
    }
  Eigen::MatrixXcd rho = M * M.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(keep, gk, rho);
}

// ---------------------------------------------------------------------------

double WignerGrid::integral() const {
  double s = 0.0;
  for (double v : w) s += v;
  return s * cell_area();
}

double WignerGrid::max_abs() const {
  double m = 0.0;
  for (double v : w) m = std::max(m, std::abs(v));
  return m;
}

double WignerGrid::min() const { return w.empty() ? 0.0 : *std::min_element(w.begin(), w.end()); }

double WignerGrid::purity() const {
  double s = 0.0;
  for (double v : w) s += v * v;
  return 2.0 * pi * s * cell_area();
}

std::vector<double> WignerGrid::position_marginal() const {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < xi.size(); ++j) out[i] += at(i, j);
    out[i] *= dxi;
  }
  return out;
}

std::vector<double> WignerGrid::momentum_marginal() const {
  std::vector<double> out(xi.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < xi.size(); ++j) out[j] += at(i, j);
  for (auto& v : out) v *= dx;
  return out;
}

WignerGrid layout(const Grid1D& grid) {
  WignerGrid g;
  g.x = grid.positions();
  const auto n = static_cast<std::ptrdiff_t>(grid.n);
  g.dx = grid.dx();
  g.dxi = 0.5 * grid.dp();
  for (std::ptrdiff_t m = -n; m < n; ++m) g.xi.push_back(static_cast<double>(m) * g.dxi);
  g.w.assign(g.x.size() * g.xi.size(), 0.0);
  return g;
}

WignerGrid wigner_transform(const DensityMatrix& rho) {
  const Grid1D& grid = rho.grid();
  const std::size_t n = grid.n, n2 = 2 * n;
  const auto N = static_cast<Eigen::Index>(n), N2 = static_cast<Eigen::Index>(n2);

  // Band-limited interpolation onto the half-spaced grid X_J = -L/2 + J dx/2:
  // Z_{J j} = (1/n) sum_f w_f cos(pi f (J - 2j) / n), f = -n/2..n/2 with the
  // Nyquist term split evenly between +-n/2.
  std::vector<double> table(2 * n2 + 1);
  for (std::ptrdiff_t d = -static_cast<std::ptrdiff_t>(n2); d <= static_cast<std::ptrdiff_t>(n2); ++d) {
    const double theta = pi * static_cast<double>(d) / static_cast<double>(n);
    double s = std::cos(0.5 * static_cast<double>(n) * theta);
    for (std::ptrdiff_t f = -static_cast<std::ptrdiff_t>(n / 2) + 1; f < static_cast<std::ptrdiff_t>(n / 2); ++f) {
      s += std::cos(static_cast<double>(f) * theta);
    }
    table[static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(n2))] = s / static_cast<double>(n);
  }
  Eigen::MatrixXd Z(N2, N);
  for (Eigen::Index J = 0; J < N2; ++J)
    for (Eigen::Index j = 0; j < N; ++j) Z(J, j) = table[static_cast<std::size_t>(J - 2 * j + N2)];

  const Eigen::MatrixXcd K = rho.matrix() / grid.dx();
  const Eigen::MatrixXcd K2 = Z.cast<cplx>() * K * Z.transpose().cast<cplx>();

  // chords leaving the box are dropped; wrapping them would add a ghost copy
  // of the state at x + L/2
  std::vector<cplx> lines(n * n2, cplx(0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t L = 0; L < n2; ++L) {
      const auto l = static_cast<std::ptrdiff_t>(L) - (L < n ? 0 : static_cast<std::ptrdiff_t>(n2));
      const auto plus = static_cast<std::ptrdiff_t>(2 * j) + l, minus = static_cast<std::ptrdiff_t>(2 * j) - l;
      if (plus < 0 || minus < 0 || plus >= N2 || minus >= N2) continue;
      lines[j * n2 + L] = K2(plus, minus);
    }
  }
  detail::dft_lines(lines.data(), n2, n, detail::Direction::forward);

  WignerGrid out = layout(grid);
  const double pref = grid.dx() / (2.0 * pi);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < n2; ++c) {
      // column c holds m = c - n
      const std::size_t m_mod = (c + n) % n2;
      out.w[j * n2 + c] = pref * lines[j * n2 + m_mod].real();
    }
  }
  return out;
}

double eigenstate_wigner(unsigned level, double alpha, double x, double xi) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  const double g = std::exp(-alpha * x * x) * std::exp(-xi * xi / alpha) / pi;
  if (level == 0) return g;
  if (level == 1) return (2.0 * alpha * x * x + 2.0 * xi * xi / alpha - 1.0) * g;
  throw InvalidArgument("closed forms are provided for levels 0 and 1");
}

WignerGrid closed_form_eigenstate_wigner(unsigned level, double alpha, const WignerGrid& like) {
  WignerGrid out = like;
  for (std::size_t i = 0; i < out.x.size(); ++i)
    for (std::size_t j = 0; j < out.xi.size(); ++j) out.w[i * out.xi.size() + j] = eigenstate_wigner(level, alpha, out.x[i], out.xi[j]);
  return out;
}

WignerGrid closed_form_eigenstate_wigner(unsigned level, double alpha, const Grid1D& grid) {
  return closed_form_eigenstate_wigner(level, alpha, layout(grid));
}

double first_excited_negativity() { return 2.0 * std::exp(-0.5) - 1.0; }

// ---------------------------------------------------------------------------

JointWigner::JointWigner(unsigned level_A, unsigned level_B, double alpha_A, double alpha_B)
    : level_A_(level_A), level_B_(level_B), alpha_A_(alpha_A), alpha_B_(alpha_B) {
  if (!(alpha_A > 0.0) || !(alpha_B > 0.0)) throw InvalidArgument("alpha_A and alpha_B must be positive");
  if (level_A > 1 || level_B > 1) throw InvalidArgument("joint Wigner functions are provided for levels 0 and 1");
}

double JointWigner::operator()(double q_B, double q_C, double pi_B, double pi_C) const {
  return eigenstate_wigner(level_A_, alpha_A_, -q_C, -pi_B - pi_C) *
         eigenstate_wigner(level_B_, alpha_B_, q_B - q_C, pi_B);
}

std::vector<JointWigner::Separable> JointWigner::separable_terms(unsigned level) {
  if (level == 0) return {{gauss_x, gauss_xi}};
  if (level == 1) return {{poly_x, gauss_xi}, {gauss_x, poly_xi}};
  throw InvalidArgument("closed forms are provided for levels 0 and 1");
}

JointWigner transformed_joint_wigner(unsigned level_A, unsigned level_B, double alpha_A, double alpha_B) {
  return JointWigner(level_A, level_B, alpha_A, alpha_B);
}

double joint_integral(const JointWigner& f, std::size_t nodes) {
  if (nodes < 3) throw InvalidArgument("quadrature needs at least three nodes");
  const double aA = f.alpha_A(), aB = f.alpha_B();
  const Rule qc = trapezoid(0.0, kWindowSigmas / std::sqrt(2.0 * aA), nodes);
  const Rule pb = trapezoid(0.0, kWindowSigmas * std::sqrt(aB / 2.0), nodes);
  // per-row partial sums keep the result independent of the thread count
  std::vector<double> rows(nodes, 0.0);
  const auto sn = static_cast<std::ptrdiff_t>(nodes);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
    const auto a = static_cast<std::size_t>(sa);
    for (std::size_t b = 0; b < nodes; ++b) {
      const Rule qb = trapezoid(qc.t[a], kWindowSigmas / std::sqrt(2.0 * aB), nodes);
      const Rule pc = trapezoid(-pb.t[b], kWindowSigmas * std::sqrt(aA / 2.0), nodes);
      double inner = 0.0;
      for (std::size_t c = 0; c < nodes; ++c)
        for (std::size_t d = 0; d < nodes; ++d) inner += qb.w[c] * pc.w[d] * f(qb.t[c], qc.t[a], pb.t[b], pc.t[d]);
      rows[a] += qc.w[a] * pb.w[b] * inner;
    }
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

WignerGrid marginal_wigner(const JointWigner& f, FrameLabel keep, const WignerGrid& like, std::size_t nodes) {
  if (keep != frames::B && keep != frames::C) throw InvalidArgument("marginals keep particle B or C");
  if (nodes < 3) throw InvalidArgument("quadrature needs at least three nodes");
  const double aA = f.alpha_A(), aB = f.alpha_B();
  const auto tA = JointWigner::separable_terms(f.level_A());
  const auto tB = JointWigner::separable_terms(f.level_B());
  const double norm = 1.0 / (pi * pi);

  // The integrand is a sum of products of one-variable factors, so the
  // tensor-product trapezoid sum factorises into one-dimensional sums.
  WignerGrid out = like;
  const std::size_t nx = out.x.size(), nxi = out.xi.size();
  const auto sn = static_cast<std::ptrdiff_t>(nx);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    const double x = out.x[i];
    for (std::size_t j = 0; j < nxi; ++j) {
      const double xi = out.xi[j];
      double value = 0.0;
      if (keep == frames::B) {
        const Rule qc = trapezoid(aB * x / (aA + aB), kWindowSigmas / std::sqrt(2.0 * (aA + aB)), nodes);
        const Rule pc = trapezoid(-xi, kWindowSigmas * std::sqrt(aA / 2.0), nodes);
        for (const auto& a : tA)
          for (const auto& b : tB) {
            double sq = 0.0, sp = 0.0;
            for (std::size_t k = 0; k < nodes; ++k) sq += qc.w[k] * b.x(aB, x - qc.t[k]) * a.x(aA, -qc.t[k]);
            for (std::size_t k = 0; k < nodes; ++k) sp += pc.w[k] * a.xi(aA, -xi - pc.t[k]);
            value += sq * b.xi(aB, xi) * sp;
          }
      } else {
        const Rule qb = trapezoid(x, kWindowSigmas / std::sqrt(2.0 * aB), nodes);
        const Rule pb = trapezoid(-xi * aB / (aA + aB), kWindowSigmas * std::sqrt(aA * aB / (2.0 * (aA + aB))), nodes);
        for (const auto& a : tA)
          for (const auto& b : tB) {
            double sq = 0.0, sp = 0.0;
            for (std::size_t k = 0; k < nodes; ++k) sq += qb.w[k] * b.x(aB, qb.t[k] - x);
            for (std::size_t k = 0; k < nodes; ++k) sp += pb.w[k] * b.xi(aB, pb.t[k]) * a.xi(aA, -pb.t[k] - xi);
            value += a.x(aA, -x) * sq * sp;
          }
      }
      out.w[i * nxi + j] = norm * value;
    }
  }
  return out;
}

double negativity_volume(const WignerGrid& w) {
  double s = 0.0;
  for (double v : w.w) s += std::max(-v, 0.0);
  return s * w.cell_area();
}

double max_abs_difference(const WignerGrid& a, const WignerGrid& b) {
  if (a.x.size() != b.x.size() || a.xi.size() != b.xi.size() || a.dx != b.dx || a.dxi != b.dxi) {
    throw GridMismatch("Wigner grids have different layouts");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.w.size(); ++k) m = std::max(m, std::abs(a.w[k] - b.w[k]));
  return m;
}

// ---------------------------------------------------------------------------

std::vector<double> schmidt_spectrum(const WaveFunction& psi) {
  if (psi.rank() != 2) throw InvalidArgument("Schmidt decomposition needs a two-axis state");
  const auto shape = psi.shape();
  const auto r = static_cast<Eigen::Index>(shape[0]), c = static_cast<Eigen::Index>(shape[1]);
  const double s = std::sqrt(psi.cell_volume());
  Eigen::MatrixXcd M(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) M(i, j) = psi[static_cast<std::size_t>(i * c + j)] * s;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  std::vector<double> lambda;
  double total = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    lambda.push_back(sv(k) * sv(k));
    total += lambda.back();
  }
  if (!(total > 0.0)) throw NumericalFailure("Schmidt decomposition of a zero state");
  for (auto& l : lambda) l /= total;
  return lambda;
}

double entanglement_entropy(const WaveFunction& psi, FrameLabel cut) {
  psi.axis_index(cut);
  double s = 0.0;
  for (double l : schmidt_spectrum(psi))
    if (l > 0.0) s -= l * std::log(l);
  return std::max(s, 0.0);
}

double switched_ground_entropy(double ratio) {
  if (!(ratio > 0.0)) throw InvalidArgument("alpha ratio must be positive");
  const double nu = std::sqrt(1.0 + 1.0 / ratio);
  const double a = 0.5 * (nu + 1.0), b = 0.5 * (nu - 1.0);
  return a * std::log(a) - (b > 0.0 ? b * std::log(b) : 0.0);
}

std::string to_csv(const WignerGrid& w) {
  std::string out = "x,xi,w\n";
  out.reserve(w.w.size() * 48);
  for (std::size_t i = 0; i < w.x.size(); ++i)
    for (std::size_t j = 0; j < w.xi.size(); ++j) {
      detail::append_double(out, w.x[i]);
      out += ',';
      detail::append_double(out, w.xi[j]);
      out += ',';
      detail::append_double(out, w.at(i, j));
      out += '\n';
    }
  return out;
}

void write_csv(const WignerGrid& w, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path.string());
  f << to_csv(w);
}

}  // namespace qrf::wigner
