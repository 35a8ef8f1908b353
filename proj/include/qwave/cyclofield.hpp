#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qwave/poly.hpp"

namespace qwave {

/// Exact element of Q[x]/Phi_k, stored as its reduced representative
/// (coords()[i] is the coefficient of x^i, i < phi(k)).
class CycloFieldElement {
 public:
  CycloFieldElement(unsigned k, const Poly& representative);
  static CycloFieldElement zero(unsigned k) { return {k, Poly{}}; }
  static CycloFieldElement one(unsigned k) { return {k, Poly::constant(1)}; }
  /// x^e, i.e. the e-th power of the generator xi_k.
  static CycloFieldElement generator_power(unsigned k, long e);

  unsigned order() const { return k_; }
  const Poly& representative() const { return rep_; }
  /// phi(k) coordinates, zero-padded.
  std::vector<Rational> coords() const;
  bool is_zero() const { return rep_.is_zero(); }

  CycloFieldElement inverse() const;
  CycloFieldElement pow(long e) const;
  /// Sum of the conjugates: sum over all primitive k-th roots eta of rep(eta).
  Rational trace() const;
  /// Numeric value with x = w = exp(2*pi*i/k). Display only.
  std::complex<double> approximate() const;

  CycloFieldElement& operator+=(const CycloFieldElement& rhs);
  CycloFieldElement& operator-=(const CycloFieldElement& rhs);
  CycloFieldElement& operator*=(const CycloFieldElement& rhs);
  CycloFieldElement& operator*=(const Rational& s);

  friend CycloFieldElement operator+(CycloFieldElement a, const CycloFieldElement& b) { return a += b; }
  friend CycloFieldElement operator-(CycloFieldElement a, const CycloFieldElement& b) { return a -= b; }
  friend CycloFieldElement operator*(CycloFieldElement a, const CycloFieldElement& b) { return a *= b; }
  friend CycloFieldElement operator*(CycloFieldElement a, const Rational& s) { return a *= s; }
  friend CycloFieldElement operator-(const CycloFieldElement& a) { return {a.k_, -a.rep_}; }
  friend bool operator==(const CycloFieldElement& a, const CycloFieldElement& b) = default;

 private:
  void check_same_field(const CycloFieldElement& rhs) const;
  unsigned k_;
  Poly rep_;
};

/// p(x^h) reduced modulo Phi_k: the value of p at xi = xi_k^h.
CycloFieldElement evaluate_at_root(const Poly& p, unsigned k, long h);

/// Polynomial in w = exp(2*pi*i/k), e.g. "1/9 - 1/9*w".
std::string to_string(const CycloFieldElement& e);

}  // namespace qwave
