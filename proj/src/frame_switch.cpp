#include "qrf/frame_switch.hpp"

#include <cmath>

namespace qrf {

FrameSwitch::FrameSwitch(FrameLabel f, FrameLabel t, SwitchBackend b) : from(f), to(t), backend(b) {
  if (from == to) throw SameFrame("a frame switch needs two different frames");
  if (from.index > 2 || to.index > 2) throw InvalidArgument("frames must be A, B or C");
}

namespace {

WaveFunction switch_parity_shear(const WaveFunction& psi, const FrameSwitch& sw) {
  const FrameLabel o = dirac::third_label(sw.from, sw.to);
  // exp(i q_G p_O): G in position, O in momentum
  WaveFunction w = apply_shear_phase(psi, sw.to, o, +1);
  // P_{GF}: |p>_G -> |-p>_F
  w = reflect_axis(w, sw.to);
  w.relabel_axis(w.axis_index(sw.to), sw.from);
  w.set_frame(sw.to);
  if (w.axes()[0].label > w.axes()[1].label) {
    const std::size_t order[2] = {1, 0};
    w = w.permuted(order);
  }
  return w;
}

}  // namespace

WaveFunction switch_frame(const WaveFunction& psi, const FrameSwitch& sw) {
  if (psi.frame() != sw.from) {
    throw FrameMismatch("state is in frame " + psi.frame().name() + ", switch starts from " + sw.from.name());
  }
  const Representation out_rep = psi.all_in(Representation::position) ? Representation::position
                                                                       : Representation::momentum;
  WaveFunction out;
  if (sw.backend == SwitchBackend::compositional) {
    out = dirac::reexpress(dirac::PhysicalState(psi), sw.to).canonical();
  } else {
    if (psi.rank() != 2) throw InvalidArgument("frame switches act on two-axis reduced states");
    if (!psi.has_axis(sw.to)) throw UnknownAxis("state has no axis for the target frame " + sw.to.name());
    out = switch_parity_shear(psi, sw);
  }
  return to_representation(out, out_rep);
}

Observable conjugate_observable(const Observable& obs, const FrameSwitch& sw) {
  const FrameLabel f = sw.from, g = sw.to;
  const FrameLabel o = dirac::third_label(f, g);
  Observable q_o = Observable::position(o) - Observable::position(f);
  Observable q_g = -Observable::position(f);
  Observable p_o = Observable::momentum(o);
  Observable p_g = -Observable::momentum(o) - Observable::momentum(f);

  Observable out;
  for (const auto& [mono, c] : obs.terms()) {
    Observable term = Observable::constant(c);
    for (const auto& [label, pw] : mono) {
      if (label == o.index) {
        term *= q_o.pow(pw.q) * p_o.pow(pw.p);
      } else if (label == g.index) {
        term *= q_g.pow(pw.q) * p_g.pow(pw.p);
      } else {
        throw UnsupportedObservable("observable refers to particle " + FrameLabel(label).name() +
                                    ", which is not a coordinate of frame " + f.name());
      }
    }
    out += term;
  }
  return out;
}

CommutationReport dynamics_frame_commutation(const WaveFunction& psi, const classical::OscillatorParams& params,
                                             double t, const FrameSwitch& sw, double dt) {
  params.validate();
  const auto system = params.system();
  const auto v = params.potential();
  const dirac::GridHamiltonian h_from(sw.from, v, system);
  const dirac::GridHamiltonian h_to(sw.to, v, system);

  CommutationReport r;
  const WaveFunction switched = switch_frame(psi, sw);
  r.energy_from = h_from.expectation(psi);
  r.energy_to = h_to.expectation(switched);
  r.relative_energy_deviation = std::abs(r.energy_to - r.energy_from) / std::max(std::abs(r.energy_from), 1e-300);
  if (t == 0.0) {
    r.fidelity = fidelity(switched, switch_frame(psi, sw));
    return r;
  }
  const WaveFunction evolve_then_switch = switch_frame(h_from.evolve(psi, t, dt), sw);
  const WaveFunction switch_then_evolve = h_to.evolve(switched, t, dt);
  r.fidelity = fidelity(evolve_then_switch, switch_then_evolve);
  return r;
}

CommutationReport dynamics_frame_commutation(const WaveFunction& psi, const classical::OscillatorParams& params,
                                             double t) {
  return dynamics_frame_commutation(psi, params, t, FrameSwitch(frames::C, frames::A));
}

}  // namespace qrf
