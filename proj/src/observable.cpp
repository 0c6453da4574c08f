#include "qrf/observable.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qrf {

namespace {

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [label, pw] : b) {
    auto& slot = out[label];
    slot.q += pw.q;
    slot.p += pw.p;
  }
  return out;
}

WaveFunction apply_power(const WaveFunction& psi, FrameLabel label, Representation rep, unsigned k) {
  if (k == 0) return psi;
  return multiply_axis(psi, label, rep, [k](double c) { return cplx(std::pow(c, static_cast<int>(k)), 0.0); });
}

// Weyl(q^a p^b) on one axis
WaveFunction apply_weyl(const WaveFunction& psi, FrameLabel label, Powers pw) {
  const auto Q = Representation::position;
  const auto P = Representation::momentum;
  if (pw.p == 0) return apply_power(psi, label, Q, pw.q);
  if (pw.q == 0) return apply_power(psi, label, P, pw.p);
  WaveFunction total(psi.frame(), psi.axes());
  const double norm = std::ldexp(1.0, -static_cast<int>(pw.q));
  for (unsigned k = 0; k <= pw.q; ++k) {
    WaveFunction t = apply_power(psi, label, Q, pw.q - k);
    t = apply_power(t, label, P, pw.p);
    t = apply_power(t, label, Q, k);
    const double c = norm * binomial(pw.q, k);
    auto dst = total.amplitudes();
    auto src = t.amplitudes();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
  }
  return total;
}

}  // namespace

Observable Observable::constant(cplx c) {
  Observable o;
  o.terms_[Monomial{}] = c;
  o.prune();
  return o;
}

Observable Observable::position(FrameLabel label) {
  Observable o;
  o.terms_[Monomial{{label.index, Powers{1, 0}}}] = 1.0;
  return o;
}

Observable Observable::momentum(FrameLabel label) {
  Observable o;
  o.terms_[Monomial{{label.index, Powers{0, 1}}}] = 1.0;
  return o;
}

std::set<std::size_t> Observable::labels() const {
  std::set<std::size_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [label, pw] : m) out.insert(label);
  return out;
}

unsigned Observable::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned t = 0;
    for (const auto& [label, pw] : m) t += pw.q + pw.p;
    d = std::max(d, t);
  }
  return d;
}

bool Observable::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return std::abs(kv.second.imag()) <= tol; });
}

cplx Observable::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cplx{} : it->second;
}

void Observable::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == cplx{}) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Observable& Observable::operator+=(const Observable& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

Observable& Observable::operator-=(const Observable& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  prune();
  return *this;
}

Observable& Observable::operator*=(const Observable& o) {
  Terms out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out[multiply(ma, mb)] += ca * cb;
  terms_ = std::move(out);
  prune();
  return *this;
}

Observable& Observable::operator*=(cplx c) {
  for (auto& [m, v] : terms_) v *= c;
  prune();
  return *this;
}

Observable Observable::pow(unsigned k) const {
  Observable out = constant(1.0);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

bool Observable::approx_equal(const Observable& o, double tol) const {
  Observable diff = *this - o;
  return std::all_of(diff.terms_.begin(), diff.terms_.end(),
                     [&](const auto& kv) { return std::abs(kv.second) <= tol; });
}

std::string Observable::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool real = c.imag() == 0.0;
    if (real) {
      const double v = c.real();
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      const double mag = std::abs(v);
      if (mag != 1.0 || m.empty()) os << mag << (m.empty() ? "" : "*");
    } else {
      if (!first) os << " + ";
      os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)" << (m.empty() ? "" : "*");
    }
    bool first_factor = true;
    for (const auto& [label, pw] : m) {
      const std::string name = FrameLabel(label).name();
      auto factor = [&](const char* sym, unsigned k) {
        if (k == 0) return;
        if (!first_factor) os << "*";
        os << sym << "_" << name;
        if (k > 1) os << "^" << k;
        first_factor = false;
      };
      factor("q", pw.q);
      factor("p", pw.p);
    }
    first = false;
  }
  return os.str();
}

WaveFunction apply(const Observable& obs, const WaveFunction& psi) {
  WaveFunction total(psi.frame(), psi.axes());
  for (const auto& [m, c] : obs.terms()) {
    WaveFunction t = psi;
    for (const auto& [label, pw] : m) t = apply_weyl(t, FrameLabel(label), pw);
    auto dst = total.amplitudes();
    auto src = t.amplitudes();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
  }
  return total;
}

double expectation(const WaveFunction& psi, const Observable& obs) {
  if (!obs.is_hermitian()) throw NonHermitianObservable("observable " + obs.to_string() + " has a complex symbol");
  const cplx num = inner_product(psi, apply(obs, psi));
  const double den = std::real(inner_product(psi, psi));
  const cplx v = num / den;
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
    throw NumericalFailure("expectation value has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace qrf
