#pragma once

#include <vector>

#include "qwave/poly.hpp"

namespace qwave {

/// r(x)/s(x) with s != 0.
struct RationalPolyExpr {
  Poly numerator;
  Poly denominator;

  RationalPolyExpr(Poly num, Poly den);
  explicit RationalPolyExpr(Poly num) : RationalPolyExpr(std::move(num), Poly::constant(1)) {}
  static RationalPolyExpr reciprocal(Poly den) { return {Poly::constant(1), std::move(den)}; }
};

// eval(r/s; a) = (alpha*r) rem a where alpha*s = 1 mod a. Every entry point
// checks gcd(s, a) = 1 and throws std::domain_error("eval undefined: shared factor")
// otherwise.

/// Direct route: one xgcd against the full modulus.
Poly eval_mod(const RationalPolyExpr& expr, const Poly& modulus);

/// eval(expr; base^k) through the iterated Bezout scheme
///   eval(1/s; base^k) = sum_{j<k} atilde_j * base^j,
///   atilde_j = (a2 * (a1^j rem s)) rem base,  a1*base + a2*s = 1,
/// which never inverts anything modulo base^k.
Poly eval_mod_power(const RationalPolyExpr& expr, const Poly& base, unsigned k);

/// eval(1/f2; (x - center)^k) as the truncated Taylor polynomial of 1/f2.
Poly eval_taylor(const Poly& f2, const Rational& center, unsigned k);

/// eval(expr; base^k), dispatching linear bases to the Taylor route and
/// everything else to eval_mod_power.
Poly eval_power(const RationalPolyExpr& expr, const Poly& base, unsigned k);

/// eval(1/Phi_n; Phi_m^k) for m != n, seeded by dresden_bezout.
Poly eval_inverse_cyclotomic(unsigned n, unsigned m, unsigned k);

/// Numerators n_j with f / prod p_j = sum n_j / p_j, deg n_j < deg p_j.
std::vector<Poly> cover_up(const Poly& f, const std::vector<Poly>& factors);

/// Psi_m(x)^j rem (1 + x^m).
Poly psi_power_rem(unsigned m, unsigned j);

}  // namespace qwave
