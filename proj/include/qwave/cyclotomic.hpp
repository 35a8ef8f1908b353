#pragma once

#include <vector>

#include "qwave/poly.hpp"

namespace qwave {

/// Phi_n with Phi_1 = 1 - x and Phi_n (n > 1) the usual monic cyclotomic
/// polynomial, so that prod_{d | n} Phi_d = 1 - x^n holds exactly.
/// Results are memoized in a process-wide insert-once cache.
const Poly& cyclotomic(unsigned n);

/// Theta_n = (1 - x^n) / Phi_n.
Poly inverse_cyclotomic(unsigned n);

/// 1 + x + ... + x^{m-1}
Poly psi(unsigned m);

/// x^k rem Phi_m, m >= 2.
Poly monomial_rem_cyclotomic(unsigned long k, unsigned m);

/// x^k rem (1 - x^m) = x^{k mod m}.
Poly monomial_rem_binomial(unsigned long k, unsigned m);

struct Bezout {
  Poly u;
  Poly v;
  bool closed_form = false;  // false when the xgcd fallback produced (u, v)
};

/// u*Phi_m + v*Phi_n = 1 for m < n. Uses Dresden's explicit cofactors when they
/// verify under the Phi_1 = 1 - x convention, otherwise falls back to xgcd.
Bezout dresden_bezout(unsigned m, unsigned n);

std::vector<unsigned> divisors(unsigned n);
unsigned euler_phi(unsigned n);
int mobius(unsigned n);

}  // namespace qwave
