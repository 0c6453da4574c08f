#include "qrf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace qrf {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Visits every multi-index of `shape` in row-major order.
template <class F>
void for_each_index(const std::vector<std::size_t>& shape, F&& f) {
  std::vector<std::size_t> idx(shape.size(), 0);
  std::size_t total = 1;
  for (auto s : shape) total *= s;
  for (std::size_t flat = 0; flat < total; ++flat) {
    f(flat, std::span<const std::size_t>(idx));
    for (std::size_t a = shape.size(); a-- > 0;) {
      if (++idx[a] < shape[a]) break;
      idx[a] = 0;
    }
  }
}

}  // namespace

Grid1D::Grid1D(std::size_t n_, double length_) : n(n_), length(length_) { validate(); }

double Grid1D::dp() const { return 2.0 * std::numbers::pi / length; }

std::ptrdiff_t Grid1D::frequency(std::size_t m) const {
  const auto sm = static_cast<std::ptrdiff_t>(m);
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return m < n / 2 ? sm : sm - sn;
}

std::size_t Grid1D::index_of_frequency(std::ptrdiff_t f) const {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((f % sn) + sn) % sn);
}

std::vector<double> Grid1D::positions() const {
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x(j);
  return out;
}

std::vector<double> Grid1D::momenta() const {
  std::vector<double> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = p(m);
  return out;
}

void Grid1D::validate() const {
  if (n < 8 || !is_power_of_two(n)) {
    throw InvalidArgument("grid size must be a power of two >= 8 (got " + std::to_string(n) + ")");
  }
  if (!(length > 0.0) || !std::isfinite(length)) throw InvalidArgument("grid length must be positive");
}

const char* to_string(Representation r) {
  return r == Representation::position ? "position" : "momentum";
}

WaveFunction::WaveFunction(FrameLabel frame, std::vector<Axis> axes)
    : frame_(frame), axes_(std::move(axes)) {
  check_axes();
  std::size_t total = 1;
  for (const auto& a : axes_) total *= a.grid.n;
  data_.assign(total, cplx{0.0, 0.0});
}

WaveFunction::WaveFunction(FrameLabel frame, std::vector<Axis> axes, std::vector<cplx> amplitudes)
    : frame_(frame), axes_(std::move(axes)), data_(std::move(amplitudes)) {
  check_axes();
  std::size_t total = 1;
  for (const auto& a : axes_) total *= a.grid.n;
  if (data_.size() != total) throw InvalidArgument("amplitude count does not match the grid shape");
}

void WaveFunction::check_axes() const {
  if (axes_.empty() || axes_.size() > 3) throw InvalidArgument("wavefunctions have one to three axes");
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    axes_[a].grid.validate();
    for (std::size_t b = a + 1; b < axes_.size(); ++b) {
      if (axes_[a].label == axes_[b].label) throw AxisClash("duplicate axis label " + axes_[a].label.name());
    }
  }
}

WaveFunction WaveFunction::sample(FrameLabel frame, std::vector<Axis> axes,
                                  const std::function<cplx(std::span<const double>)>& f) {
  WaveFunction psi(frame, std::move(axes));
  std::vector<double> coords(psi.rank());
  for_each_index(psi.shape(), [&](std::size_t flat, std::span<const std::size_t> idx) {
    for (std::size_t a = 0; a < idx.size(); ++a) coords[a] = psi.axes_[a].coordinate(idx[a]);
    psi.data_[flat] = f(coords);
  });
  return psi;
}

std::size_t WaveFunction::axis_index(FrameLabel label) const {
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    if (axes_[a].label == label) return a;
  }
  throw UnknownAxis("no axis labelled " + label.name());
}

bool WaveFunction::has_axis(FrameLabel label) const {
  return std::any_of(axes_.begin(), axes_.end(), [&](const Axis& a) { return a.label == label; });
}

std::vector<std::size_t> WaveFunction::shape() const {
  std::vector<std::size_t> s;
  for (const auto& a : axes_) s.push_back(a.grid.n);
  return s;
}

std::size_t WaveFunction::stride(std::size_t axis_pos) const {
  std::size_t s = 1;
  for (std::size_t a = axis_pos + 1; a < axes_.size(); ++a) s *= axes_[a].grid.n;
  return s;
}

double WaveFunction::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.cell();
  return v;
}

double WaveFunction::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s * cell_volume());
}

WaveFunction WaveFunction::normalized() const {
  const double nrm = norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalFailure("cannot normalise a zero or non-finite state");
  WaveFunction out = *this;
  for (auto& z : out.data_) z /= nrm;
  return out;
}

bool WaveFunction::all_in(Representation r) const {
  return std::all_of(axes_.begin(), axes_.end(), [&](const Axis& a) { return a.rep == r; });
}

WaveFunction WaveFunction::permuted(std::span<const std::size_t> order) const {
  if (order.size() != axes_.size()) throw InvalidArgument("axis permutation has the wrong length");
  std::vector<Axis> axes;
  for (auto o : order) axes.push_back(axes_.at(o));
  WaveFunction out(frame_, axes);
  const auto old_shape = shape();
  std::vector<std::size_t> new_strides(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_strides[k] = out.stride(k);
  // old axis order[k] -> new axis k
  std::vector<std::size_t> old_to_new(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) old_to_new[order[k]] = k;
  for_each_index(old_shape, [&](std::size_t flat, std::span<const std::size_t> idx) {
    std::size_t target = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) target += idx[a] * new_strides[old_to_new[a]];
    out.data_[target] = data_[flat];
  });
  return out;
}

WaveFunction change_representation(const WaveFunction& psi, FrameLabel label, Representation target) {
  const std::size_t a = psi.axis_index(label);
  const Axis& axis = psi.axes()[a];
  if (axis.rep == target) return psi;

  std::vector<Axis> axes = psi.axes();
  axes[a].rep = target;
  std::vector<cplx> data(psi.amplitudes().begin(), psi.amplitudes().end());
  const auto shape = psi.shape();
  const std::size_t n = axis.grid.n;
  const std::size_t inner = psi.stride(a);
  const std::size_t outer = data.size() / (n * inner);

  const bool to_momentum = target == Representation::momentum;
  if (!to_momentum) {
    // undo the (-1)^m sign before the inverse sum
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t m = 1; m < n; m += 2)
        for (std::size_t i = 0; i < inner; ++i) data[(o * n + m) * inner + i] = -data[(o * n + m) * inner + i];
  }
  detail::dft_axis(data, shape, a, to_momentum ? detail::Direction::forward : detail::Direction::backward);
  const double scale = (to_momentum ? axis.grid.dx() : axis.grid.dp()) / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k < n; ++k) {
      const double s = (to_momentum && (k & 1U)) ? -scale : scale;
      for (std::size_t i = 0; i < inner; ++i) data[(o * n + k) * inner + i] *= s;
    }
  }
  return WaveFunction(psi.frame(), std::move(axes), std::move(data));
}

WaveFunction to_representation(const WaveFunction& psi, Representation target) {
  WaveFunction out = psi;
  for (const auto& a : psi.axes()) out = change_representation(out, a.label, target);
  return out;
}

cplx inner_product(const WaveFunction& psi, const WaveFunction& phi) {
  if (psi.axes() != phi.axes()) throw GridMismatch("inner product needs identical axes and representations");
  cplx s{0.0, 0.0};
  const auto a = psi.amplitudes();
  const auto b = phi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s * psi.cell_volume();
}

double fidelity(const WaveFunction& psi, const WaveFunction& phi) {
  WaveFunction other = phi;
  if (psi.rank() != phi.rank()) throw GridMismatch("fidelity needs states of equal rank");
  for (const auto& ax : psi.axes()) other = change_representation(other, ax.label, ax.rep);
  // bring axis order in line with psi
  std::vector<std::size_t> order;
  for (const auto& ax : psi.axes()) order.push_back(other.axis_index(ax.label));
  other = other.permuted(order);
  const cplx ov = inner_product(psi, other);
  const double n1 = std::real(inner_product(psi, psi));
  const double n2 = std::real(inner_product(other, other));
  return std::norm(ov) / (n1 * n2);
}

WaveFunction apply_shear_phase(const WaveFunction& psi, FrameLabel pos_axis, FrameLabel mom_axis,
                               int sign) {
  if (pos_axis == mom_axis) throw AxisClash("shear needs two distinct axes");
  if (sign != 1 && sign != -1) throw InvalidArgument("shear sign must be +1 or -1");
  const std::size_t ap = psi.axis_index(pos_axis);
  const std::size_t am = psi.axis_index(mom_axis);
  WaveFunction work = change_representation(psi, pos_axis, Representation::position);
  work = change_representation(work, mom_axis, Representation::momentum);

  const Grid1D& gp = work.axes()[ap].grid;
  const Grid1D& gm = work.axes()[am].grid;
  const std::size_t sp = work.stride(ap), sm = work.stride(am);
  const double s = static_cast<double>(sign);
  auto data = work.amplitudes();
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    const std::size_t j = (flat / sp) % gp.n;
    const std::size_t m = (flat / sm) % gm.n;
    const double phase = s * gp.x(j) * gm.p(m);
    data[flat] *= cplx(std::cos(phase), std::sin(phase));
  }
  work = change_representation(work, pos_axis, psi.axes()[ap].rep);
  return change_representation(work, mom_axis, psi.axes()[am].rep);
}

WaveFunction reflect_axis(const WaveFunction& psi, FrameLabel label) {
  const std::size_t a = psi.axis_index(label);
  const std::size_t n = psi.axes()[a].grid.n;
  const std::size_t inner = psi.stride(a);
  const std::size_t outer = psi.size() / (n * inner);
  WaveFunction out = psi;
  auto src = psi.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < inner; ++i)
        dst[(o * n + (n - k) % n) * inner + i] = src[(o * n + k) * inner + i];
  return out;
}

double boundary_ratio(const WaveFunction& psi) {
  const WaveFunction pos = to_representation(psi, Representation::position);
  const auto shape = pos.shape();
  double peak = 0.0, edge = 0.0;
  for_each_index(shape, [&](std::size_t flat, std::span<const std::size_t> idx) {
    const double v = std::abs(pos[flat]);
    peak = std::max(peak, v);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] == 0 || idx[a] + 1 == shape[a]) {
        edge = std::max(edge, v);
        break;
      }
    }
  });
  return peak > 0.0 ? edge / peak : 0.0;
}

namespace {

WaveFunction multiply_in(const WaveFunction& psi, Representation rep,
                         const std::function<cplx(std::span<const double>)>& f) {
  WaveFunction work = to_representation(psi, rep);
  std::vector<double> coords(work.rank());
  const auto& axes = work.axes();
  for_each_index(work.shape(), [&](std::size_t flat, std::span<const std::size_t> idx) {
    for (std::size_t a = 0; a < idx.size(); ++a) coords[a] = axes[a].coordinate(idx[a]);
    work[flat] *= f(coords);
  });
  for (const auto& ax : psi.axes()) work = change_representation(work, ax.label, ax.rep);
  return work;
}

}  // namespace

WaveFunction multiply_axis(const WaveFunction& psi, FrameLabel label, Representation rep,
                           const std::function<cplx(double)>& h) {
  const std::size_t a = psi.axis_index(label);
  WaveFunction work = change_representation(psi, label, rep);
  const Axis& axis = work.axes()[a];
  const std::size_t n = axis.grid.n;
  const std::size_t inner = work.stride(a);
  const std::size_t outer = work.size() / (n * inner);
  std::vector<cplx> factor(n);
  for (std::size_t k = 0; k < n; ++k) factor[k] = h(axis.coordinate(k));
  auto data = work.amplitudes();
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < inner; ++i) data[(o * n + k) * inner + i] *= factor[k];
  return change_representation(work, label, psi.axes()[a].rep);
}

WaveFunction multiply_position(const WaveFunction& psi,
                               const std::function<cplx(std::span<const double>)>& f) {
  return multiply_in(psi, Representation::position, f);
}

WaveFunction multiply_momentum(const WaveFunction& psi,
                               const std::function<cplx(std::span<const double>)>& g) {
  return multiply_in(psi, Representation::momentum, g);
}

}  // namespace qrf
