#include "qrf/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qrf/dense.hpp"
#include "qrf/fixture.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace qrf::dirac {

std::array<FrameLabel, 2> reduced_labels(FrameLabel frame) {
  if (frame.index > 2) throw InvalidArgument("quantum states are defined for particles A, B and C only");
  std::array<FrameLabel, 2> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != frame.index) out[k++] = FrameLabel(i);
  return out;
}

FrameLabel third_label(FrameLabel a, FrameLabel b) {
  if (a == b || a.index > 2 || b.index > 2) throw InvalidArgument("need two distinct labels among A, B, C");
  return FrameLabel(3 - a.index - b.index);
}

namespace {

// Bring a two-axis state into ascending label order.
WaveFunction ascending(const WaveFunction& psi) {
  if (psi.rank() != 2) throw InvalidArgument("reduced states have exactly two axes");
  if (psi.axes()[0].label < psi.axes()[1].label) return psi;
  const std::size_t order[2] = {1, 0};
  return psi.permuted(order);
}

}  // namespace

PhysicalState::PhysicalState(const WaveFunction& reduced) {
  const auto labels = reduced_labels(reduced.frame());
  WaveFunction psi = ascending(reduced);
  if (psi.axes()[0].label != labels[0] || psi.axes()[1].label != labels[1]) {
    throw FrameMismatch("axes " + psi.axes()[0].label.name() + psi.axes()[1].label.name() +
                        " do not match the reduction of frame " + reduced.frame().name());
  }
  if (psi.axes()[0].grid != psi.axes()[1].grid) {
    throw GridMismatch("both axes of a physical state must share one grid (commensurate momenta)");
  }
  canonical_ = to_representation(psi, Representation::momentum);
}

PhysicalState reexpress(const PhysicalState& state, FrameLabel new_frame) {
  const FrameLabel f = state.frame();
  if (new_frame == f) throw SameFrame("reexpress needs a different frame");
  const auto old_labels = reduced_labels(f);
  if (new_frame != old_labels[0] && new_frame != old_labels[1]) {
    throw InvalidArgument("frame " + new_frame.name() + " is not part of this system");
  }
  const FrameLabel o = third_label(f, new_frame);
  const Grid1D& g = state.grid();
  const std::size_t n = g.n;

  const auto new_labels = reduced_labels(new_frame);  // ascending {F, O}
  std::vector<Axis> axes = {Axis{new_labels[0], g, Representation::momentum},
                            Axis{new_labels[1], g, Representation::momentum}};
  WaveFunction out(new_frame, axes);

  const WaveFunction& in = state.canonical();
  const std::size_t in_o = in.axis_index(o), in_g = in.axis_index(new_frame);
  const std::size_t out_f = out.axis_index(f), out_o = out.axis_index(o);
  const std::size_t in_so = in.stride(in_o), in_sg = in.stride(in_g);
  const std::size_t out_sf = out.stride(out_f), out_so = out.stride(out_o);
  for (std::size_t mf = 0; mf < n; ++mf) {
    for (std::size_t mo = 0; mo < n; ++mo) {
      const std::size_t mg = (2 * n - mf - mo) % n;  // p_G = -p_F - p_O
      out[mf * out_sf + mo * out_so] = in[mo * in_so + mg * in_sg];
    }
  }
  return PhysicalState(out);
}

WaveFunction reduction(const PhysicalState& state, FrameLabel frame) {
  if (frame == state.frame()) return state.canonical();
  return reexpress(state, frame).canonical();
}

cplx physical_inner_product(const PhysicalState& s1, const PhysicalState& s2) {
  return physical_inner_product(s1, s2, s1.frame());
}

cplx physical_inner_product(const PhysicalState& s1, const PhysicalState& s2, FrameLabel frame) {
  if (s1.grid() != s2.grid()) throw GridMismatch("physical states live on different grids");
  return inner_product(reduction(s1, frame), reduction(s2, frame));
}

std::string dump(const PhysicalState& state) { return fixture::dump(state.canonical(), "physical-state"); }

PhysicalState parse_physical_state(std::string_view text) {
  std::string kind;
  WaveFunction psi = fixture::parse(text, &kind);
  if (kind != "physical-state") throw InvalidArgument("fixture kind '" + kind + "' is not a physical state");
  return PhysicalState(psi);
}

// ---------------------------------------------------------------------------

GridHamiltonian::GridHamiltonian(FrameLabel frame, classical::Potential potential,
                                 classical::ParticleSystem system)
    : frame_(frame), labels_(reduced_labels(frame)), v_(std::move(potential)), system_(std::move(system)) {
  if (system_.size() != 3) throw InvalidArgument("the grid Hamiltonian is defined for three particles");
  system_.validate();
  const double inv_f = 1.0 / system_.mass(frame_);
  k_aa_ = 1.0 / system_.mass(labels_[0]) + inv_f;
  k_bb_ = 1.0 / system_.mass(labels_[1]) + inv_f;
  k_ab_ = inv_f;
}

double GridHamiltonian::kinetic(double pa, double pb) const {
  return 0.5 * k_aa_ * pa * pa + 0.5 * k_bb_ * pb * pb + k_ab_ * pa * pb;
}

double GridHamiltonian::potential(double qa, double qb) const {
  double q[3] = {0.0, 0.0, 0.0};
  q[labels_[0].index] = qa;
  q[labels_[1].index] = qb;
  return v_(std::span<const double>(q, 3));
}

Observable GridHamiltonian::kinetic_observable() const {
  const Observable pa = Observable::momentum(labels_[0]);
  const Observable pb = Observable::momentum(labels_[1]);
  return cplx(0.5 * k_aa_) * pa * pa + cplx(0.5 * k_bb_) * pb * pb + cplx(k_ab_) * pa * pb;
}

WaveFunction GridHamiltonian::ordered(const WaveFunction& psi) const {
  if (psi.frame() != frame_) {
    throw FrameMismatch("state is in frame " + psi.frame().name() + ", Hamiltonian in frame " + frame_.name());
  }
  WaveFunction out = ascending(psi);
  if (out.axes()[0].label != labels_[0] || out.axes()[1].label != labels_[1]) {
    throw UnknownAxis("state axes do not match the reduced coordinates of frame " + frame_.name());
  }
  return out;
}

WaveFunction GridHamiltonian::apply(const WaveFunction& psi_in) const {
  const WaveFunction psi = ordered(psi_in);
  WaveFunction t = multiply_momentum(psi, [this](std::span<const double> p) { return cplx(kinetic(p[0], p[1])); });
  WaveFunction v = multiply_position(psi, [this](std::span<const double> q) { return cplx(potential(q[0], q[1])); });
  auto dst = t.amplitudes();
  auto src = v.amplitudes();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return t;
}

double GridHamiltonian::expectation(const WaveFunction& psi_in) const {
  const WaveFunction psi = ordered(psi_in);
  const cplx num = inner_product(psi, apply(psi));
  const double den = std::real(inner_product(psi, psi));
  const cplx v = num / den;
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
    throw NumericalFailure("energy expectation has an imaginary part");
  }
  return v.real();
}

WaveFunction GridHamiltonian::split_step(const WaveFunction& psi_in, double t, double dt, bool imaginary) const {
  if (!(dt > 0.0)) throw InvalidStep("time step must be positive");
  if (!(t >= 0.0)) throw InvalidStep("propagation time must be non-negative");
  const WaveFunction psi = ordered(psi_in);
  if (t == 0.0) return psi_in;
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-9));
  const double h = t / static_cast<double>(steps);

  WaveFunction work = to_representation(psi, Representation::position);
  const auto& axes = work.axes();
  const std::size_t na = axes[0].grid.n, nb = axes[1].grid.n;
  std::vector<cplx> half_v(na * nb), full_v(na * nb), kin(na * nb);
  auto propagator = [imaginary](double energy, double tau) {
    return imaginary ? cplx(std::exp(-energy * tau), 0.0) : std::polar(1.0, -energy * tau);
  };
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const double v = potential(axes[0].grid.x(i), axes[1].grid.x(j));
      half_v[i * nb + j] = propagator(v, 0.5 * h);
      full_v[i * nb + j] = propagator(v, h);
      kin[i * nb + j] = propagator(kinetic(axes[0].grid.p(i), axes[1].grid.p(j)), h);
    }
  }
  auto scale = [](WaveFunction& w, const std::vector<cplx>& f) {
    auto d = w.amplitudes();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] *= f[i];
  };

  // V/2 T V/2 per step; adjacent half potential kicks are merged.
  scale(work, half_v);
  for (std::size_t s = 0; s < steps; ++s) {
    work = to_representation(work, Representation::momentum);
    scale(work, kin);
    work = to_representation(work, Representation::position);
    scale(work, s + 1 == steps ? half_v : full_v);
    if (imaginary) work = work.normalized();
  }
  for (const auto& ax : psi_in.axes()) work = change_representation(work, ax.label, ax.rep);
  return work;
}

WaveFunction GridHamiltonian::evolve(const WaveFunction& psi, double t, double dt) const {
  return split_step(psi, t, dt, false);
}

WaveFunction GridHamiltonian::relax(const WaveFunction& psi, double tau, double dtau) const {
  return split_step(psi, tau, dtau, true).normalized();
}

GridHamiltonian reduced_quantum_hamiltonian(FrameLabel frame, const classical::Potential& potential,
                                            const classical::ParticleSystem& system) {
  return GridHamiltonian(frame, potential, system);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kOracleMaxPoints = 16;
constexpr int kProbeCount = 16;

struct Oracle {
  Grid1D grid;
  FrameLabel frame;
  std::array<FrameLabel, 2> others;
  std::vector<Axis> basis;  // A, B, C in position representation
  dense::Matrix P;          // total momentum
  dense::Matrix P_frame;    // frame momentum
};

Oracle make_oracle(const PhysicalState& state) {
  Oracle o;
  o.grid = state.grid();
  if (o.grid.n > kOracleMaxPoints) {
    throw TooLarge("trivialization oracle is limited to " + std::to_string(kOracleMaxPoints) + " points per axis");
  }
  o.frame = state.frame();
  o.others = reduced_labels(o.frame);
  for (std::size_t i = 0; i < 3; ++i) o.basis.push_back(Axis{FrameLabel(i), o.grid, Representation::position});
  o.P_frame = dense::DenseOperator::momentum(o.basis, o.frame).matrix();
  o.P = o.P_frame;
  for (auto l : o.others) o.P += dense::DenseOperator::momentum(o.basis, l).matrix();
  return o;
}

// T'_k in the position basis: diagonal in the frame coordinate x_a, where it
// acts as e^{i k x_a} times the translation exp(i x_a p) on both other axes.
dense::Matrix trivialization_matrix(const Oracle& o, double k) {
  const std::size_t n = o.grid.n;
  const auto N = static_cast<Eigen::Index>(n * n * n);
  const dense::Matrix P1 = dense::momentum_1d(o.grid);
  dense::Matrix T = dense::Matrix::Zero(N, N);
  std::array<std::size_t, 3> stride = {n * n, n, 1};
  const std::size_t sf = stride[o.frame.index];
  const std::size_t s1 = stride[o.others[0].index], s2 = stride[o.others[1].index];
  for (std::size_t a = 0; a < n; ++a) {
    const double xa = o.grid.x(a);
    const dense::Matrix scaled = (cplx(0.0, xa) * P1).eval();
    const dense::Matrix E = scaled.exp();
    const cplx phase = std::polar(1.0, k * xa);
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j1 = 0; j1 < n; ++j1)
          for (std::size_t j2 = 0; j2 < n; ++j2) {
            const auto row = static_cast<Eigen::Index>(a * sf + i1 * s1 + i2 * s2);
            const auto col = static_cast<Eigen::Index>(a * sf + j1 * s1 + j2 * s2);
            T(row, col) = phase * E(static_cast<Eigen::Index>(i1), static_cast<Eigen::Index>(j1)) *
                          E(static_cast<Eigen::Index>(i2), static_cast<Eigen::Index>(j2));
          }
  }
  return T;
}

// Three-axis momentum-space amplitude for frequencies (f_A, f_B, f_C).
WaveFunction momentum_state(const Oracle& o) {
  std::vector<Axis> axes = o.basis;
  for (auto& a : axes) a.rep = Representation::momentum;
  return WaveFunction(o.frame, axes);
}

std::size_t flat3(const Oracle& o, std::size_t mf, std::size_t m1, std::size_t m2) {
  const std::size_t n = o.grid.n;
  std::array<std::size_t, 3> idx{};
  idx[o.frame.index] = mf;
  idx[o.others[0].index] = m1;
  idx[o.others[1].index] = m2;
  return (idx[0] * n + idx[1]) * n + idx[2];
}

double relative_norm(const dense::Vector& r, const dense::Vector& v) { return r.norm() / v.norm(); }

}  // namespace

std::vector<TrivializationReport> trivialization_family_check(const PhysicalState& state,
                                                              const std::vector<double>& ks,
                                                              std::uint64_t probe_seed) {
  const Oracle o = make_oracle(state);
  const std::size_t n = o.grid.n;
  const double dp = o.grid.dp();
  const auto half = static_cast<std::ptrdiff_t>(n / 2);

  std::vector<std::ptrdiff_t> kappas;
  for (double k : ks) {
    const double ratio = k / dp;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 || std::abs(rounded) >= static_cast<double>(half)) {
      throw KOutOfRange("k = " + std::to_string(k) + " is not an in-range multiple of dp = " + std::to_string(dp));
    }
    kappas.push_back(static_cast<std::ptrdiff_t>(rounded));
  }

  // Physical state on the three-axis grid: the total-momentum delta becomes
  // delta_{m m'} / dp, so that sqrt(2 pi) <x_F = 0| recovers the reduction.
  const WaveFunction& canon = state.canonical();  // momentum, axes (O1, O2)
  WaveFunction phi_p = momentum_state(o);
  for (std::size_t m1 = 0; m1 < n; ++m1)
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      const std::size_t mf = (2 * n - m1 - m2) % n;
      phi_p[flat3(o, mf, m1, m2)] = canon[m1 * n + m2] / dp;
    }
  const dense::Vector phi = dense::to_vector(phi_p);
  const double annihilation = relative_norm(o.P * phi, phi);

  const WaveFunction canon_pos = to_representation(canon, Representation::position);
  const dense::Matrix Pf = o.P_frame;
  const auto N = static_cast<Eigen::Index>(n * n * n);

  std::vector<TrivializationReport> reports;
  WaveFunction reference;
  std::mt19937_64 rng(probe_seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    const std::ptrdiff_t kappa = kappas[i];
    const dense::Matrix T = trivialization_matrix(o, k);
    const dense::Matrix shifted = Pf - k * dense::Matrix::Identity(N, N);

    TrivializationReport rep;
    rep.k = k;
    rep.annihilation_residual = annihilation;

    for (int probe = 0; probe < kProbeCount; ++probe) {
      WaveFunction v_p = momentum_state(o);
      for (std::size_t mf = 0; mf < n; ++mf)
        for (std::size_t m1 = 0; m1 < n; ++m1)
          for (std::size_t m2 = 0; m2 < n; ++m2) {
            const std::ptrdiff_t shifted_f =
                o.grid.frequency(mf) - o.grid.frequency(m1) - o.grid.frequency(m2) - kappa;
            if (shifted_f < -half || shifted_f >= half) continue;
            v_p[flat3(o, mf, m1, m2)] = cplx(normal(rng), normal(rng));
          }
      const dense::Vector v = dense::to_vector(v_p);
      const dense::Vector lhs = T * (o.P * (T.adjoint() * v));
      rep.constraint_residual = std::max(rep.constraint_residual, relative_norm(lhs - shifted * v, v));
    }

    const dense::Vector tphi = T * phi;
    rep.transformed_residual = relative_norm(shifted * tphi, tphi);

    // sqrt(2 pi) <x_F = 0| on the transformed state
    const std::array<FrameLabel, 2> labels = o.others;
    WaveFunction red(o.frame, {Axis{labels[0], o.grid, Representation::position},
                               Axis{labels[1], o.grid, Representation::position}});
    const std::size_t origin = o.grid.origin_index();
    const double root2pi = std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        red[i1 * n + i2] = root2pi * tphi(static_cast<Eigen::Index>(flat3(o, origin, i1, i2)));
    rep.fidelity_to_canonical = fidelity(canon_pos, red);
    for (std::size_t j = 0; j < red.size(); ++j)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(red[j] - canon_pos[j]));
    if (i == 0) reference = red;
    rep.fidelity_to_k0 = ks[0] == 0.0 ? fidelity(reference, red) : 0.0;
    rep.reduced = red;
    reports.push_back(std::move(rep));
  }
  // without an explicit k = 0 entry, compare against a separate k = 0 run
  if (!ks.empty() && ks[0] != 0.0) {
    const auto base = trivialization_family_check(state, std::vector<double>{0.0}, probe_seed);
    for (auto& r : reports) r.fidelity_to_k0 = fidelity(base.front().reduced, r.reduced);
  }
  return reports;
}

TrivializationReport trivialization_family_check(const PhysicalState& state, double k) {
  return trivialization_family_check(state, std::vector<double>{k}).front();
}

}  // namespace qrf::dirac
