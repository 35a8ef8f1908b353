#include "qwave/evalop.hpp"

#include <stdexcept>

#include "qwave/cyclotomic.hpp"
#include "qwave/series.hpp"

namespace qwave {

namespace {

[[noreturn]] void shared_factor() { throw std::domain_error("eval undefined: shared factor"); }

void require_modulus(const Poly& modulus) {
  if (modulus.is_constant()) throw std::invalid_argument("eval modulus must be nonconstant");
}

// a1*f1 + a2*f2 = 1; returns eval(1/f2; f1^k).
Poly iterated_inverse(const Poly& f1, const Poly& f2, const Poly& a1, const Poly& a2, unsigned k) {
  Poly result;
  Poly f1_pow = Poly::constant(1);
  Poly a1_pow = Poly::constant(1);  // a1^j rem f2; j = 0 is left unreduced
  for (unsigned j = 0; j < k; ++j) {
    if (j > 0) {
      a1_pow = (a1_pow * a1) % f2;
      f1_pow *= f1;
    }
    result += ((a2 * a1_pow) % f1) * f1_pow;
  }
  return result;
}

}  // namespace

RationalPolyExpr::RationalPolyExpr(Poly num, Poly den) : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
}

Poly eval_mod(const RationalPolyExpr& expr, const Poly& modulus) {
  require_modulus(modulus);
  const auto [g, alpha, beta] = xgcd(expr.denominator, modulus);
  if (g != Poly::constant(1)) shared_factor();
  return (alpha * expr.numerator) % modulus;
}

Poly eval_mod_power(const RationalPolyExpr& expr, const Poly& base, unsigned k) {
  require_modulus(base);
  if (k == 0) throw std::invalid_argument("eval power must be >= 1");
  const auto [g, a1, a2] = xgcd(base, expr.denominator);
  if (g != Poly::constant(1)) shared_factor();
  const Poly inverse = iterated_inverse(base, expr.denominator, a1, a2, k);
  if (expr.numerator == Poly::constant(1)) return inverse;
  return (inverse * expr.numerator) % pow(base, k);
}

Poly eval_taylor(const Poly& f2, const Rational& center, unsigned k) {
  if (k == 0) throw std::invalid_argument("eval power must be >= 1");
  return resum(taylor_coeffs(Poly::constant(1), f2, center, k), center);
}

Poly eval_power(const RationalPolyExpr& expr, const Poly& base, unsigned k) {
  if (base.degree() != 1) return eval_mod_power(expr, base, k);
  if (k == 0) throw std::invalid_argument("eval power must be >= 1");
  // (b1*x + b0)^k and (x - c)^k generate the same ideal.
  const Rational center = -base.coeff(0) / base.coeff(1);
  if (sgn(expr.denominator(center)) == 0) shared_factor();
  return resum(taylor_coeffs(expr.numerator, expr.denominator, center, k), center);
}

Poly eval_inverse_cyclotomic(unsigned n, unsigned m, unsigned k) {
  if (n == m) shared_factor();
  const Poly& phi_m = cyclotomic(m);
  const Poly& phi_n = cyclotomic(n);
  if (m < n) {
    const auto bz = dresden_bezout(m, n);  // u*Phi_m + v*Phi_n = 1
    return iterated_inverse(phi_m, phi_n, bz.u, bz.v, k);
  }
  const auto bz = dresden_bezout(n, m);  // u*Phi_n + v*Phi_m = 1
  return iterated_inverse(phi_m, phi_n, bz.v, bz.u, k);
}

std::vector<Poly> cover_up(const Poly& f, const std::vector<Poly>& factors) {
  if (factors.empty()) throw std::invalid_argument("cover_up needs at least one factor");
  Poly product = Poly::constant(1);
  for (const auto& p : factors) {
    if (p.is_constant()) throw std::invalid_argument("cover_up factors must be nonconstant");
    product *= p;
  }
  if (f.degree() >= product.degree()) throw std::invalid_argument("cover_up requires deg f < deg prod p_j");
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (gcd(factors[i], factors[j]) != Poly::constant(1))
        throw std::domain_error("cover_up factors are not pairwise coprime");

  std::vector<Poly> numerators;
  numerators.reserve(factors.size());
  for (const auto& p : factors) numerators.push_back(eval_mod({f, exact_div(product, p)}, p));
  return numerators;
}

Poly psi_power_rem(unsigned m, unsigned j) {
  const Poly modulus = Poly::constant(1) + Poly::monomial(Rational(1), m);
  const Poly base = psi(m);
  Poly g = Poly::constant(1);
  for (unsigned i = 0; i < j; ++i) g = (g * base) % modulus;
  return g;
}

}  // namespace qwave
