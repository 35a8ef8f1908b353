#include <doctest.h>

#include "qwave/cyclotomic.hpp"

using namespace qwave;

namespace {

// Mobius product prod_{d|n} (x^d - 1)^{mu(n/d)}, independent of the divisor sieve.
Poly cyclotomic_by_mobius(unsigned n) {
  Poly num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    const Poly f = -Poly::one_minus_xpow(d);  // x^d - 1
    if (mu == 1) num *= f;
    if (mu == -1) den *= f;
  }
  Poly phi = exact_div(num, den);
  return n == 1 ? -phi : phi;
}

}  // namespace

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1) == Poly{1, -1});
  CHECK(cyclotomic(2) == Poly{1, 1});
  CHECK(cyclotomic(4) == Poly{1, 0, 1});
  CHECK(cyclotomic(6) == Poly{1, -1, 1});
  CHECK_THROWS(cyclotomic(0));
}

TEST_CASE("inverse cyclotomic and psi examples") {
  CHECK(inverse_cyclotomic(1) == Poly{1});
  CHECK(inverse_cyclotomic(2) == Poly{1, -1});
  CHECK(inverse_cyclotomic(4) == Poly{1, 0, -1});
  CHECK(psi(1) == Poly{1});
  CHECK(psi(3) == Poly{1, 1, 1});
  CHECK(psi(5) == Poly{1, 1, 1, 1, 1});
}

TEST_CASE("property: divisor products and the Mobius oracle") {
  for (unsigned n = 1; n <= 60; ++n) {
    Poly prod{1};
    for (unsigned d : divisors(n)) prod *= cyclotomic(d);
    CHECK(prod == Poly::one_minus_xpow(n));
    CHECK(inverse_cyclotomic(n) * cyclotomic(n) == Poly::one_minus_xpow(n));
    CHECK(cyclotomic(n) == cyclotomic_by_mobius(n));
    CHECK(cyclotomic(n).degree() == static_cast<long>(euler_phi(n)));
  }
}

TEST_CASE("property: distinct cyclotomics are coprime") {
  for (unsigned m = 1; m <= 40; ++m)
    for (unsigned n = m + 1; n <= 40; ++n) CHECK(gcd(cyclotomic(m), cyclotomic(n)) == Poly{1});
}

TEST_CASE("monomial remainders") {
  CHECK(monomial_rem_cyclotomic(5, 3) == Poly{-1, -1});
  CHECK(monomial_rem_cyclotomic(7, 4) == Poly{0, -1});
  CHECK(monomial_rem_cyclotomic(0, 7) == Poly{1});
  CHECK(monomial_rem_binomial(7, 3) == Poly{0, 1});
  CHECK(monomial_rem_binomial(6, 3) == Poly{1});
  CHECK(monomial_rem_binomial(2, 5) == Poly{0, 0, 1});
  for (unsigned m = 2; m <= 30; ++m)
    for (unsigned long k = 0; k <= 200; ++k)
      REQUIRE(monomial_rem_cyclotomic(k, m) == Poly::monomial(Rational(1), k) % cyclotomic(m));
}

TEST_CASE("dresden bezout") {
  for (auto [m, n] : {std::pair{2u, 4u}, {2u, 3u}, {1u, 2u}}) {
    const Bezout b = dresden_bezout(m, n);
    CHECK(b.u * cyclotomic(m) + b.v * cyclotomic(n) == Poly{1});
  }
  const Bezout b12 = dresden_bezout(1, 2);
  CHECK(b12.u == Poly::constant(Rational(1, 2)));
  CHECK(b12.v == Poly::constant(Rational(1, 2)));
  CHECK_THROWS(dresden_bezout(4, 4));
  CHECK_THROWS(dresden_bezout(5, 3));

  unsigned closed = 0, total = 0;
  for (unsigned n = 2; n <= 30; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const Bezout b = dresden_bezout(m, n);
      REQUIRE(b.u * cyclotomic(m) + b.v * cyclotomic(n) == Poly{1});
      closed += b.closed_form;
      ++total;
    }
  // Most pairs are served by the closed form; the rest by the fallback.
  CHECK(closed > total / 2);
}

TEST_CASE("number theory helpers") {
  CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
}
