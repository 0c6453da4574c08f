#include "qrf/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace qrf::classical {

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " contains a non-finite entry");
  }
}

void require_same_size(const ExtendedPhasePoint& x) {
  if (x.q.size() != x.p.size()) throw InvalidArgument("phase point q and p lengths differ");
}

}  // namespace

ParticleSystem ParticleSystem::unit(std::size_t n) {
  ParticleSystem s{std::vector<double>(n, 1.0)};
  s.validate();
  return s;
}

ParticleSystem ParticleSystem::with_masses(std::vector<double> masses) {
  ParticleSystem s{std::move(masses)};
  s.validate();
  return s;
}

void ParticleSystem::validate() const {
  if (masses.size() < 2) throw InvalidArgument("a particle system needs at least two particles");
  for (double m : masses) {
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("particle masses must be positive");
  }
}

ReducedPhasePoint ReducedPhasePoint::make(FrameLabel frame, std::size_t n, std::vector<double> q,
                                          std::vector<double> p) {
  if (n < 2 || frame.index >= n) throw InvalidArgument("frame index out of range");
  if (q.size() != n - 1 || p.size() != n - 1) {
    throw InvalidArgument("reduced point needs n-1 positions and momenta");
  }
  require_finite(q, "reduced q");
  require_finite(p, "reduced p");
  ReducedPhasePoint rp;
  rp.frame = frame;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != frame.index) rp.labels.push_back(i);
  }
  rp.q = std::move(q);
  rp.p = std::move(p);
  return rp;
}

std::size_t ReducedPhasePoint::slot(std::size_t label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw InvalidArgument("particle " + FrameLabel(label).name() + " is not a reduced coordinate");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

Potential::Potential(Value value, Gradient gradient)
    : value_(std::move(value)), gradient_(std::move(gradient)) {}

std::vector<double> Potential::gradient(std::span<const double> q) const {
  std::vector<double> g(q.size(), 0.0);
  if (gradient_) {
    gradient_(q, g);
    return g;
  }
  std::vector<double> work(q.begin(), q.end());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double q0 = work[i];
    work[i] = q0 + kGradientStep;
    const double up = value_(work);
    work[i] = q0 - kGradientStep;
    const double down = value_(work);
    work[i] = q0;
    g[i] = (up - down) / (2.0 * kGradientStep);
  }
  return g;
}

Potential Potential::free() {
  return Potential([](std::span<const double>) { return 0.0; },
                   [](std::span<const double>, std::span<double> g) {
                     std::fill(g.begin(), g.end(), 0.0);
                   });
}

Potential Potential::springs(std::vector<Spring> springs) {
  auto value = [springs](std::span<const double> q) {
    double v = 0.0;
    for (const auto& s : springs) {
      const double d = q[s.i] - q[s.j];
      v += 0.5 * s.k * d * d;
    }
    return v;
  };
  auto gradient = [springs](std::span<const double> q, std::span<double> g) {
    std::fill(g.begin(), g.end(), 0.0);
    for (const auto& s : springs) {
      const double f = s.k * (q[s.i] - q[s.j]);
      g[s.i] += f;
      g[s.j] -= f;
    }
  };
  return Potential(value, gradient);
}

Potential Potential::oscillators(double k_A, double k_B) {
  // V = k_A (q_C - q_A)^2 / 2 + k_B (q_C - q_B)^2 / 2
  return springs({{2, 0, k_A}, {2, 1, k_B}});
}

TranslationCheck check_translation_invariance(const Potential& v, std::size_t n,
                                              std::size_t samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  TranslationCheck out;
  std::vector<double> q(n), shifted(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& x : q) x = coord(rng);
    const double c = 3.0 * coord(rng);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = q[i] + c;
    out.max_shift_deviation = std::max(out.max_shift_deviation, std::abs(v(shifted) - v(q)));
    const auto g = v.gradient(q);
    out.max_gradient_sum =
        std::max(out.max_gradient_sum, std::abs(std::accumulate(g.begin(), g.end(), 0.0)));
  }
  return out;
}

double total_momentum(const ExtendedPhasePoint& x) {
  return std::accumulate(x.p.begin(), x.p.end(), 0.0);
}

bool on_constraint_surface(const ExtendedPhasePoint& x, double tol) {
  return std::abs(total_momentum(x)) <= tol;
}

ExtendedPhasePoint gauge_flow(const ExtendedPhasePoint& x, double s) {
  require_same_size(x);
  ExtendedPhasePoint out = x;
  for (auto& q : out.q) q += s;
  return out;
}

ExtendedPhasePoint embed_reduced(const ReducedPhasePoint& rp) {
  const std::size_t n = rp.particle_count();
  ExtendedPhasePoint x{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  double sum = 0.0;
  for (std::size_t k = 0; k < rp.labels.size(); ++k) {
    x.q[rp.labels[k]] = rp.q[k];
    x.p[rp.labels[k]] = rp.p[k];
    sum += rp.p[k];
  }
  x.q[rp.frame.index] = 0.0;
  x.p[rp.frame.index] = -sum;
  return x;
}

ReducedPhasePoint project_reduced(const ExtendedPhasePoint& x, FrameLabel frame, double tol) {
  require_same_size(x);
  const std::size_t n = x.size();
  if (frame.index >= n) throw InvalidArgument("frame index out of range");
  const double P = total_momentum(x);
  if (std::abs(P) > tol) {
    throw ConstraintViolation("point is off the constraint surface (P = " + std::to_string(P) + ")");
  }
  if (std::abs(x.q[frame.index]) > tol) {
    throw ConstraintViolation("point violates the gauge condition q_" + frame.name() + " = 0");
  }
  std::vector<double> q, p;
  q.reserve(n - 1);
  p.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == frame.index) continue;
    q.push_back(x.q[i]);
    p.push_back(x.p[i]);
  }
  return ReducedPhasePoint::make(frame, n, std::move(q), std::move(p));
}

ReducedPhasePoint classical_frame_switch(const ReducedPhasePoint& rp, FrameLabel new_frame) {
  if (new_frame == rp.frame) throw SameFrame("frame switch requires a different target frame");
  const std::size_t slot = rp.slot(new_frame.index);
  const ExtendedPhasePoint flowed = gauge_flow(embed_reduced(rp), -rp.q[slot]);
  return project_reduced(flowed, new_frame);
}

double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g,
                       const ExtendedPhasePoint& x, double h) {
  require_same_size(x);
  ExtendedPhasePoint work = x;
  auto partial = [&](const PhaseFunction& fn, bool momentum, std::size_t i) {
    double& slot = momentum ? work.p[i] : work.q[i];
    const double x0 = slot;
    slot = x0 + h;
    const double up = fn(work);
    slot = x0 - h;
    const double down = fn(work);
    slot = x0;
    return (up - down) / (2.0 * h);
  };
  double bracket = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bracket += partial(f, false, i) * partial(g, true, i) - partial(f, true, i) * partial(g, false, i);
  }
  return bracket;
}

double dirac_bracket(const PhaseFunction& f, const PhaseFunction& g, const ExtendedPhasePoint& x,
                     FrameLabel frame, double h) {
  if (frame.index >= x.size()) throw InvalidArgument("frame index out of range");
  const PhaseFunction chi = functions::position(frame.index);
  const PhaseFunction P = functions::total_momentum();
  return poisson_bracket(f, g, x, h) - poisson_bracket(f, P, x, h) * poisson_bracket(chi, g, x, h) +
         poisson_bracket(f, chi, x, h) * poisson_bracket(P, g, x, h);
}

std::vector<double> lagrangian_momenta(std::span<const double> velocities) {
  if (velocities.empty()) return {};
  const double mean =
      std::accumulate(velocities.begin(), velocities.end(), 0.0) / static_cast<double>(velocities.size());
  std::vector<double> p(velocities.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = velocities[i] - mean;
  return p;
}

namespace functions {

PhaseFunction position(std::size_t i) {
  return [i](const ExtendedPhasePoint& x) { return x.q.at(i); };
}

PhaseFunction momentum(std::size_t i) {
  return [i](const ExtendedPhasePoint& x) { return x.p.at(i); };
}

PhaseFunction relative_position(std::size_t i, std::size_t j) {
  return [i, j](const ExtendedPhasePoint& x) { return x.q.at(i) - x.q.at(j); };
}

PhaseFunction total_momentum() {
  return [](const ExtendedPhasePoint& x) { return classical::total_momentum(x); };
}

}  // namespace functions

}  // namespace qrf::classical
