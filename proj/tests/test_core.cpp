#include <doctest.h>

#include <stdexcept>

#include "gen.hpp"
#include "qwave/poly.hpp"
#include "qwave/series.hpp"

using namespace qwave;
using qwave::testing::random_poly;
using qwave::testing::uniform;

TEST_CASE("rationals stay canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("-3/2") == r);
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(factorial(5) == 120);
  CHECK(binomial(Integer(6), 2) == 15);
}

TEST_CASE("poly canonical form") {
  const Poly z(std::vector<Rational>{0, 0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  const Poly p{1, 2, 0};
  CHECK(p.degree() == 1);
  CHECK(p.size() == 2);
  CHECK(Poly{1, -1} * Poly{1, 1} == Poly{1, 0, -1});
  CHECK(Poly{1, 2, 3}(Rational(2)) == 17);
  CHECK(Poly{1, 1}.inflate(3) == Poly{1, 0, 0, 1});
  CHECK(Poly{1, 1, 1}.reflect() == Poly{1, -1, 1});
}

TEST_CASE("divrem examples") {
  auto [q1, r1] = divrem(Poly{-1, 0, 1}, Poly{-1, 1});
  CHECK(q1 == Poly{1, 1});
  CHECK(r1.is_zero());

  auto [q2, r2] = divrem(Poly{0, 1}, Poly{0, 0, 1});
  CHECK(q2.is_zero());
  CHECK(r2 == Poly{0, 1});

  auto [q3, r3] = divrem(Poly::one_minus_xpow(4), Poly{1, 0, 1});
  CHECK(q3 == Poly{1, 0, -1});
  CHECK(r3.is_zero());

  try {
    divrem(Poly{1, 1}, Poly{});
    FAIL("expected zero divisor error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "zero divisor");
  }
}

TEST_CASE("xgcd examples") {
  auto a = xgcd(Poly{1, -1}, Poly{1, 1});
  CHECK(a.g == Poly{1});
  CHECK(a.u == Poly::constant(Rational(1, 2)));
  CHECK(a.v == Poly::constant(Rational(1, 2)));

  auto b = xgcd(Poly{-1, 1}, Poly{-1, 1});
  CHECK(b.g == Poly{-1, 1});
  CHECK(b.u * Poly{-1, 1} + b.v * Poly{-1, 1} == b.g);

  auto c = xgcd(Poly{1, 1}, Poly{1, 0, 1});
  CHECK(c.g == Poly{1});
  CHECK(c.u == Poly{1, -1} * Rational(1, 2));
  CHECK(c.v == Poly::constant(Rational(1, 2)));

  CHECK_THROWS(xgcd(Poly{}, Poly{}));
}

TEST_CASE("property: divrem reconstructs") {
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(static_cast<unsigned>(uniform(0, 30)));
    const Poly b = random_poly(static_cast<unsigned>(uniform(0, 15)));
    const auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("property: xgcd identity and degree bounds") {
  for (int trial = 0; trial < 150; ++trial) {
    const Poly common = random_poly(static_cast<unsigned>(uniform(0, 3)));
    const Poly a = random_poly(static_cast<unsigned>(uniform(1, 12))) * common;
    const Poly b = random_poly(static_cast<unsigned>(uniform(1, 12))) * common;
    const auto r = xgcd(a, b);
    CHECK(r.u * a + r.v * b == r.g);
    CHECK(r.g.lead() == 1);
    CHECK((a % r.g).is_zero());
    CHECK((b % r.g).is_zero());
    CHECK(r.g.degree() >= common.degree());
    if (r.g.degree() == 0) {
      CHECK(r.u.degree() < b.degree());
      CHECK(r.v.degree() < a.degree());
    }
  }
}

TEST_CASE("taylor_coeffs examples") {
  CHECK(taylor_coeffs(Poly{1}, Poly{1, -1}, Rational(0), 4) == Series{1, 1, 1, 1});
  // 3/(1+x+x^2) = 1 - (x-1) + ..., 2/(1+x^3) = 1 - (3/2)(x-1) + ...
  CHECK(taylor_coeffs(Poly{3}, Poly{1, 1, 1}, Rational(1), 2) == Series{1, -1});
  CHECK(taylor_coeffs(Poly{2}, Poly{1, 0, 0, 1}, Rational(1), 2) == Series{1, Rational(-3, 2)});
  try {
    taylor_coeffs(Poly{1}, Poly{1, -1}, Rational(1), 3);
    FAIL("expected pole error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "pole at expansion center");
  }
  CHECK_THROWS_AS(taylor_coeffs(Poly{1}, Poly{1, 1}, Rational(0), 0), std::invalid_argument);
}

TEST_CASE("property: taylor_coeffs agrees modulo (x-c)^k") {
  for (int trial = 0; trial < 60; ++trial) {
    const Rational c = qwave::testing::random_rational(4);
    Poly den = random_poly(static_cast<unsigned>(uniform(0, 6)));
    if (sgn(den(c)) == 0) den += Poly{1};
    if (sgn(den(c)) == 0) continue;
    const Poly num = random_poly(static_cast<unsigned>(uniform(0, 6)));
    const unsigned k = static_cast<unsigned>(uniform(1, 8));
    const Poly approx = resum(taylor_coeffs(num, den, c, k), c);
    const Poly diff = den * approx - num;
    const Poly local = pow(Poly::x() - Poly::constant(c), k);
    CHECK((diff % local).is_zero());
  }
}

TEST_CASE("taylor_shift and series helpers") {
  const Poly p{1, 2, 3};
  const Poly q = taylor_shift(p, Rational(2));
  // p(x) = q(x - 2)
  for (long t = -3; t <= 3; ++t) CHECK(p(Rational(t)) == q(Rational(t - 2)));
  const Series inv = series_inv(truncate(Poly{1, -1}, 5), 5);
  CHECK(inv == Series{1, 1, 1, 1, 1});
  CHECK_THROWS(series_inv(Series{0, 1}, 3));
  CHECK(exact_div(Poly{-1, 0, 1}, Poly{1, 1}) == Poly{-1, 1});
  CHECK_THROWS(exact_div(Poly{1, 0, 1}, Poly{1, 1}));
}
