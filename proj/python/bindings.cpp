#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qrf/classical.hpp"
#include "qrf/dynamics.hpp"
#include "qrf/errors.hpp"
#include "qrf/experiment.hpp"
#include "qrf/frame_switch.hpp"
#include "qrf/states.hpp"
#include "qrf/wigner.hpp"

namespace py = pybind11;
using namespace qrf;

namespace {

FrameLabel label(const std::string& name) { return FrameLabel::from_name(name); }

// 2-D complex array, first index = first axis.
py::array_t<cplx> amplitudes(const WaveFunction& psi) {
  std::vector<py::ssize_t> shape;
  for (auto s : psi.shape()) shape.push_back(static_cast<py::ssize_t>(s));
  py::array_t<cplx> out(shape);
  std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), out.mutable_data());
  return out;
}

WaveFunction from_array(const std::string& frame, const std::vector<std::string>& labels, std::size_t n,
                        double length, py::array_t<cplx, py::array::c_style | py::array::forcecast> a) {
  const Grid1D g(n, length);
  std::vector<Axis> axes;
  for (const auto& l : labels) axes.push_back({label(l), g, Representation::position});
  WaveFunction psi(label(frame), axes);
  if (static_cast<std::size_t>(a.size()) != psi.size()) throw InvalidArgument("array size does not match the grid");
  std::copy(a.data(), a.data() + a.size(), psi.amplitudes().begin());
  return psi;
}

py::array_t<double> wigner_array(const wigner::WignerGrid& w) {
  py::array_t<double> out({static_cast<py::ssize_t>(w.x.size()), static_cast<py::ssize_t>(w.xi.size())});
  std::copy(w.w.begin(), w.w.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum reference frame simulations";
  m.attr("__version__") = experiment::version();

  py::register_exception<Error>(m, "Error");

  py::class_<Grid1D>(m, "Grid")
      .def(py::init<std::size_t, double>(), py::arg("n"), py::arg("length"))
      .def_readonly("n", &Grid1D::n)
      .def_readonly("length", &Grid1D::length)
      .def_property_readonly("dx", &Grid1D::dx)
      .def_property_readonly("dp", &Grid1D::dp)
      .def("positions", &Grid1D::positions);

  py::class_<WaveFunction>(m, "WaveFunction")
      .def_property_readonly("frame", [](const WaveFunction& w) { return w.frame().name(); })
      .def_property_readonly("labels",
                             [](const WaveFunction& w) {
                               std::vector<std::string> out;
                               for (const auto& a : w.axes()) out.push_back(a.label.name());
                               return out;
                             })
      .def("norm", &WaveFunction::norm)
      .def("amplitudes", [](const WaveFunction& w) { return amplitudes(to_representation(w, Representation::position)); });

  m.def("wavefunction", &from_array, py::arg("frame"), py::arg("labels"), py::arg("n"), py::arg("length"),
        py::arg("amplitudes"), "Position-representation state from a complex array.");
  m.def(
      "ho_product",
      [](unsigned level_A, unsigned level_B, double alpha_A, double alpha_B, const Grid1D& g) {
        return states::ho_product(frames::C, frames::A, level_A, alpha_A, frames::B, level_B, alpha_B, g);
      },
      py::arg("level_A"), py::arg("level_B"), py::arg("alpha_A"), py::arg("alpha_B"), py::arg("grid"),
      "Product of oscillator eigenstates of A and B seen from C.");
  m.def(
      "switch_frame",
      [](const WaveFunction& psi, const std::string& from, const std::string& to, const std::string& backend) {
        if (backend != "parity_shear" && backend != "compositional")
          throw InvalidArgument("unknown switch backend '" + backend + "'");
        const auto b = backend == "parity_shear" ? SwitchBackend::parity_shear : SwitchBackend::compositional;
        return switch_frame(psi, FrameSwitch(label(from), label(to), b));
      },
      py::arg("psi"), py::arg("source"), py::arg("target"), py::arg("backend") = "compositional");
  m.def("fidelity", &fidelity);
  m.def(
      "entanglement_entropy", [](const WaveFunction& psi, const std::string& cut) {
        return wigner::entanglement_entropy(psi, label(cut));
      },
      py::arg("psi"), py::arg("cut"));
  m.def("switched_ground_entropy", &wigner::switched_ground_entropy, py::arg("ratio"));
  m.def(
      "reduced_wigner",
      [](const WaveFunction& psi, const std::string& keep) {
        const auto w = wigner::wigner_transform(wigner::partial_trace(psi, label(keep)));
        return py::make_tuple(w.x, w.xi, wigner_array(w));
      },
      py::arg("psi"), py::arg("keep"), "(x, xi, W) of the reduced state of one axis.");

  m.def(
      "classical_switch",
      [](const std::string& frame, std::vector<double> q, std::vector<double> p, const std::string& target) {
        const std::size_t n = q.size() + 1;
        const auto rp = classical::ReducedPhasePoint::make(label(frame), n, std::move(q), std::move(p));
        const auto out = classical::classical_frame_switch(rp, label(target));
        return py::make_tuple(out.q, out.p);
      },
      py::arg("frame"), py::arg("q"), py::arg("p"), py::arg("target"));

  m.def(
      "run_config",
      [](const std::string& text, const std::filesystem::path& out) {
        auto c = experiment::parse_config(text);
        c.output_dir = out;
        const auto r = experiment::run_experiment(c);
        py::dict metrics;
        for (const auto& [k, v] : r.metrics) metrics[py::str(k)] = v;
        return metrics;
      },
      py::arg("text"), py::arg("output_dir"), "Runs a config given as text; returns its metrics.");
  m.def(
      "figure",
      [](const std::string& name, const std::filesystem::path& out) {
        std::vector<std::string> files;
        for (const auto& f : experiment::emit_figure_data(name, out).files) files.push_back(f.name);
        return files;
      },
      py::arg("name"), py::arg("output_dir"));
}
