#pragma once

// Polynomial observables in the position and momentum operators of the grid
// axes. An Observable stores its Weyl symbol, a commuting polynomial in
// (q_i, p_i); the operator is the Weyl (symmetric) quantisation of that
// symbol. Factors on different axes commute, so only same-axis q^a p^b
// monomials need an ordering:
//   Weyl(q^a p^b) = 2^{-a} sum_k C(a,k) Q^k P^b Q^{a-k}.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "qrf/grid.hpp"

namespace qrf {

struct Powers {
  unsigned q = 0;
  unsigned p = 0;
  auto operator<=>(const Powers&) const = default;
};

/// Particle index -> (power of q, power of p). Zero powers are never stored.
using Monomial = std::map<std::size_t, Powers>;

class Observable {
 public:
  using Terms = std::map<Monomial, cplx>;

  Observable() = default;
  static Observable constant(cplx c);
  static Observable position(FrameLabel label);
  static Observable momentum(FrameLabel label);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Particle labels the observable acts on.
  std::set<std::size_t> labels() const;
  /// Highest total degree over all monomials.
  unsigned degree() const;
  /// True when every coefficient is real (the symbol is real).
  bool is_hermitian(double tol = 0.0) const;
  cplx coefficient(const Monomial& m) const;

  Observable& operator+=(const Observable& o);
  Observable& operator-=(const Observable& o);
  Observable& operator*=(const Observable& o);
  Observable& operator*=(cplx c);

  friend Observable operator+(Observable a, const Observable& b) { return a += b; }
  friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
  friend Observable operator*(Observable a, const Observable& b) { return a *= b; }
  friend Observable operator*(cplx c, Observable a) { return a *= c; }
  friend Observable operator*(Observable a, cplx c) { return a *= c; }
  friend Observable operator-(Observable a) { return a *= cplx(-1.0); }

  /// Integer power of the symbol.
  Observable pow(unsigned k) const;

  /// max |coefficient difference| below tol for every monomial.
  bool approx_equal(const Observable& o, double tol = 1e-12) const;
  std::string to_string() const;

 private:
  Terms terms_;
  void prune();
};

/// Weyl-ordered operator applied to psi. Throws UnknownAxis for labels psi
/// does not carry. The result keeps psi's representations.
WaveFunction apply(const Observable& obs, const WaveFunction& psi);

/// <psi|O|psi> / <psi|psi>. Throws NonHermitianObservable for a complex symbol
/// and NumericalFailure if the result has an imaginary part above 1e-10.
double expectation(const WaveFunction& psi, const Observable& obs);

}  // namespace qrf
