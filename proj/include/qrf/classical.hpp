#pragma once

// Perspective-neutral classical layer for N particles on a line: the total
// momentum constraint P = sum p_i, the translation gauge flow it generates,
// gauge fixing q_frame = 0, and the maps between the constraint surface and
// the reduced phase space seen from one particle.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qrf/frame.hpp"

namespace qrf::classical {

/// Membership tolerance for the constraint surface and the gauge-fixing surface.
inline constexpr double kSurfaceTolerance = 1e-9;
/// Central-difference step used for Poisson brackets.
inline constexpr double kBracketStep = 1e-5;
/// Central-difference step used for potential gradients without an analytic form.
inline constexpr double kGradientStep = 1e-6;

struct ParticleSystem {
  std::vector<double> masses;

  /// n particles of unit mass.
  static ParticleSystem unit(std::size_t n);
  static ParticleSystem with_masses(std::vector<double> masses);

  std::size_t size() const { return masses.size(); }
  double mass(FrameLabel f) const { return masses.at(f.index); }

  /// Throws InvalidArgument unless n >= 2 and every mass is positive.
  void validate() const;
};

struct ExtendedPhasePoint {
  std::vector<double> q;
  std::vector<double> p;

  std::size_t size() const { return q.size(); }
};

/// Phase-space point seen from `frame`. `labels` lists the remaining particle
/// indices in ascending order; q[i], p[i] belong to particle labels[i].
struct ReducedPhasePoint {
  FrameLabel frame;
  std::vector<std::size_t> labels;
  std::vector<double> q;
  std::vector<double> p;

  /// Builds a reduced point for an n-particle system, labelling the
  /// coordinates with the ascending indices that skip `frame`.
  static ReducedPhasePoint make(FrameLabel frame, std::size_t n, std::vector<double> q,
                                std::vector<double> p);

  std::size_t particle_count() const { return labels.size() + 1; }
  /// Position of coordinate slot for particle `label`; throws if absent.
  std::size_t slot(std::size_t label) const;
};

/// Translation-invariant potential V(q_1, ..., q_n).
class Potential {
 public:
  using Value = std::function<double(std::span<const double>)>;
  using Gradient = std::function<void(std::span<const double>, std::span<double>)>;

  Potential() = default;
  explicit Potential(Value value, Gradient gradient = {});

  double operator()(std::span<const double> q) const { return value_(q); }

  /// dV/dq_i for every particle; analytic when supplied, otherwise central
  /// differences with step kGradientStep.
  std::vector<double> gradient(std::span<const double> q) const;
  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

  /// V = 0.
  static Potential free();
  /// Springs sum_{(i,j)} k_ij (q_i - q_j)^2 / 2 over the listed pairs.
  struct Spring {
    std::size_t i;
    std::size_t j;
    double k;
  };
  static Potential springs(std::vector<Spring> springs);
  /// The three-particle oscillator model: A and B tied to C with springs k_A, k_B.
  static Potential oscillators(double k_A, double k_B);

 private:
  Value value_;
  Gradient gradient_;
};

/// Samples random shifts and reports max |V(q + c) - V(q)| and max |sum_i dV/dq_i|.
struct TranslationCheck {
  double max_shift_deviation = 0.0;
  double max_gradient_sum = 0.0;
};
TranslationCheck check_translation_invariance(const Potential& v, std::size_t n,
                                              std::size_t samples, unsigned seed);

using PhaseFunction = std::function<double(const ExtendedPhasePoint&)>;

double total_momentum(const ExtendedPhasePoint& x);
bool on_constraint_surface(const ExtendedPhasePoint& x, double tol = kSurfaceTolerance);

/// Flow of the constraint for parameter distance s: every q_i moves by s.
ExtendedPhasePoint gauge_flow(const ExtendedPhasePoint& x, double s);

/// Embedding of the reduced phase space into the constraint surface:
/// q_frame = 0 and p_frame = -(sum of the other momenta).
ExtendedPhasePoint embed_reduced(const ReducedPhasePoint& rp);

/// Inverse of embed_reduced on the gauge-fixed constraint surface. Throws
/// ConstraintViolation when |P| or |q_frame| exceeds `tol`.
ReducedPhasePoint project_reduced(const ExtendedPhasePoint& x, FrameLabel frame,
                                  double tol = kSurfaceTolerance);

/// Changes perspective by embedding, flowing with s = -q_new and projecting.
ReducedPhasePoint classical_frame_switch(const ReducedPhasePoint& rp, FrameLabel new_frame);

/// Canonical Poisson bracket by central differences with step h.
double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g,
                       const ExtendedPhasePoint& x, double h = kBracketStep);

/// Dirac bracket for the second-class pair (P, chi = q_frame):
/// {F,G}_D = {F,G} - {F,P}{chi,G} + {F,chi}{P,G}.
double dirac_bracket(const PhaseFunction& f, const PhaseFunction& g,
                     const ExtendedPhasePoint& x, FrameLabel frame, double h = kBracketStep);

/// Legendre map of the translation-invariant Lagrangian:
/// p_i = v_i - (1/N) sum_j v_j.
std::vector<double> lagrangian_momenta(std::span<const double> velocities);

namespace functions {
PhaseFunction position(std::size_t i);
PhaseFunction momentum(std::size_t i);
PhaseFunction relative_position(std::size_t i, std::size_t j);
PhaseFunction total_momentum();
}  // namespace functions

}  // namespace qrf::classical
