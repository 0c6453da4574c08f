#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "qrf/classical.hpp"
#include "qrf/grid.hpp"

namespace qrf::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::vector<double> vec(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }
  // k / 2^10 in [-8, 8): sums and differences stay exact in double precision
  double dyadic() { return static_cast<double>(static_cast<long>(index(1u << 14)) - (1 << 13)) / 1024.0; }

  classical::ReducedPhasePoint reduced(FrameLabel frame, std::size_t n, double range = 5.0) {
    return classical::ReducedPhasePoint::make(frame, n, vec(n - 1, -range, range), vec(n - 1, -range, range));
  }

  classical::ExtendedPhasePoint on_surface(std::size_t n, double range = 5.0) {
    classical::ExtendedPhasePoint x{vec(n, -range, range), vec(n, -range, range)};
    double s = 0.0;
    for (double p : x.p) s += p;
    x.p.back() -= s;
    return x;
  }

  // Random smooth state on every axis: a sum of two product Gaussians.
  WaveFunction state(FrameLabel frame, std::vector<Axis> axes) {
    struct Term {
      cplx w;
      std::vector<double> alpha, x0, k0;
    };
    std::vector<Term> terms(2);
    for (auto& t : terms) {
      t.w = {uniform(-1, 1), uniform(-1, 1)};
      for (std::size_t a = 0; a < axes.size(); ++a) {
        t.alpha.push_back(uniform(1.0, 3.0));
        t.x0.push_back(uniform(-1.5, 1.5));
        t.k0.push_back(uniform(-1.5, 1.5));
      }
    }
    return WaveFunction::sample(frame, axes, [&](std::span<const double> x) {
             cplx s = 0.0;
             for (const auto& t : terms) {
               cplx v = t.w;
               for (std::size_t a = 0; a < x.size(); ++a) {
                 const double d = x[a] - t.x0[a];
                 v *= std::exp(cplx(-0.5 * t.alpha[a] * d * d, t.k0[a] * x[a]));
               }
               s += v;
             }
             return s;
           })
        .normalized();
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Axis> position_axes(std::initializer_list<FrameLabel> labels, const Grid1D& g) {
  std::vector<Axis> out;
  for (auto l : labels) out.push_back({l, g, Representation::position});
  return out;
}

}  // namespace qrf::testing
