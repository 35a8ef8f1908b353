#include "qwave/cyclofield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwave/cyclotomic.hpp"

namespace qwave {

CycloFieldElement::CycloFieldElement(unsigned k, const Poly& representative)
    : k_(k), rep_(representative % cyclotomic(k)) {}

CycloFieldElement CycloFieldElement::generator_power(unsigned k, long e) {
  const long m = static_cast<long>(k);
  const long reduced = ((e % m) + m) % m;
  if (k == 1) return one(1);
  return {k, monomial_rem_cyclotomic(static_cast<unsigned long>(reduced), k)};
}

std::vector<Rational> CycloFieldElement::coords() const {
  std::vector<Rational> out(euler_phi(k_));
  for (std::size_t i = 0; i < rep_.size(); ++i) out[i] = rep_.coeffs()[i];
  return out;
}

void CycloFieldElement::check_same_field(const CycloFieldElement& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("cyclotomic field mismatch");
}

CycloFieldElement CycloFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  const auto [g, u, v] = xgcd(rep_, cyclotomic(k_));
  if (g != Poly::constant(1)) throw std::logic_error("Phi_k is irreducible; nonzero element must be a unit");
  return {k_, u};
}

CycloFieldElement CycloFieldElement::pow(long e) const {
  CycloFieldElement base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  CycloFieldElement result = one(k_);
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Rational CycloFieldElement::trace() const {
  // Trace of multiplication-by-rep on the power basis 1, x, ..., x^{phi-1}.
  const unsigned dim = euler_phi(k_);
  Rational tr;
  Poly basis = Poly::constant(1);
  for (unsigned i = 0; i < dim; ++i) {
    tr += ((rep_ * basis) % cyclotomic(k_)).coeff(i);
    basis = basis * Poly::x();
  }
  return tr;
}

std::complex<double> CycloFieldElement::approximate() const {
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(k_);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    acc += rep_.coeffs()[i].get_d() * std::polar(1.0, angle * static_cast<double>(i));
  }
  return acc;
}

CycloFieldElement& CycloFieldElement::operator+=(const CycloFieldElement& rhs) {
  check_same_field(rhs);
  rep_ += rhs.rep_;
  return *this;
}

CycloFieldElement& CycloFieldElement::operator-=(const CycloFieldElement& rhs) {
  check_same_field(rhs);
  rep_ -= rhs.rep_;
  return *this;
}

CycloFieldElement& CycloFieldElement::operator*=(const CycloFieldElement& rhs) {
  check_same_field(rhs);
  rep_ = (rep_ * rhs.rep_) % cyclotomic(k_);
  return *this;
}

CycloFieldElement& CycloFieldElement::operator*=(const Rational& s) {
  rep_ *= s;
  return *this;
}

CycloFieldElement evaluate_at_root(const Poly& p, unsigned k, long h) {
  CycloFieldElement acc = CycloFieldElement::zero(k);
  const CycloFieldElement xi = CycloFieldElement::generator_power(k, h);
  // Horner with xi.
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= xi;
    acc += CycloFieldElement(k, Poly::constant(*it));
  }
  return acc;
}

std::string to_string(const CycloFieldElement& e) { return to_string(e.representative(), "w"); }

}  // namespace qwave
