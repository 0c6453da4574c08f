#include "qrf/states.hpp"

#include <cmath>
#include <numbers>

namespace qrf::states {

double ho_eigenfunction(unsigned level, double alpha, double x) {
  if (!(alpha > 0.0)) throw InvalidArgument("oscillator width parameter must be positive");
  const double s = std::sqrt(alpha) * x;
  const double envelope = std::pow(alpha / std::numbers::pi, 0.25) * std::exp(-0.5 * s * s);
  // normalised Hermite functions by the stable three-term recurrence
  double h_prev = 0.0;
  double h = 1.0;
  for (unsigned k = 0; k < level; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * s * h - std::sqrt(k / (k + 1.0)) * h_prev;
    h_prev = h;
    h = next;
  }
  return envelope * h;
}

WaveFunction ho_state(FrameLabel frame, FrameLabel label, const Grid1D& grid, unsigned level, double alpha) {
  return WaveFunction::sample(frame, {Axis{label, grid, Representation::position}},
                              [&](std::span<const double> x) { return cplx(ho_eigenfunction(level, alpha, x[0])); });
}

WaveFunction ho_product(FrameLabel frame, FrameLabel label_a, unsigned level_a, double alpha_a,
                        FrameLabel label_b, unsigned level_b, double alpha_b, const Grid1D& grid) {
  return WaveFunction::sample(
      frame, {Axis{label_a, grid, Representation::position}, Axis{label_b, grid, Representation::position}},
      [&](std::span<const double> x) {
        return cplx(ho_eigenfunction(level_a, alpha_a, x[0]) * ho_eigenfunction(level_b, alpha_b, x[1]));
      });
}

cplx gaussian_packet(double x, double alpha, double x0, double k0) {
  const double d = x - x0;
  const double amp = std::pow(alpha / std::numbers::pi, 0.25) * std::exp(-0.5 * alpha * d * d);
  return amp * cplx(std::cos(k0 * x), std::sin(k0 * x));
}

double RandomStates::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

WaveFunction RandomStates::next(FrameLabel frame, FrameLabel label_a, FrameLabel label_b, const Grid1D& grid) {
  struct Packet {
    cplx weight;
    double alpha_a, x_a, k_a, alpha_b, x_b, k_b;
  };
  std::normal_distribution<double> normal(0.0, 1.0);
  const int terms = 2 + static_cast<int>(uniform(0.0, 2.0));
  std::vector<Packet> packets;
  for (int t = 0; t < terms; ++t) {
    Packet p;
    p.weight = cplx(normal(rng_), normal(rng_));
    p.alpha_a = uniform(1.0, 3.0);
    p.x_a = uniform(-1.5, 1.5);
    p.k_a = uniform(-1.5, 1.5);
    p.alpha_b = uniform(1.0, 3.0);
    p.x_b = uniform(-1.5, 1.5);
    p.k_b = uniform(-1.5, 1.5);
    packets.push_back(p);
  }
  WaveFunction psi = WaveFunction::sample(
      frame, {Axis{label_a, grid, Representation::position}, Axis{label_b, grid, Representation::position}},
      [&](std::span<const double> x) {
        cplx s{};
        for (const auto& p : packets) {
          s += p.weight * gaussian_packet(x[0], p.alpha_a, p.x_a, p.k_a) *
               gaussian_packet(x[1], p.alpha_b, p.x_b, p.k_b);
        }
        return s;
      });
  return psi.normalized();
}

}  // namespace qrf::states
