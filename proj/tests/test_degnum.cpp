#include <doctest.h>

#include "qwave/degnum.hpp"
#include "qwave/qpartial.hpp"

using namespace qwave;

TEST_CASE("deg_series examples") {
  // 2/(1+x) = 1 + (1-x)/2 + (1-x)^2/4 + ...
  CHECK(deg_series(DegKind::bernoulli, 1, 2, 3).coeffs == Series{1, Rational(1, 2), Rational(1, 4)});
  for (unsigned m = 1; m <= 10; ++m) {
    const auto s = deg_series(DegKind::bernoulli, 1, m, 3).coeffs;
    CHECK(s[0] == 1);
    CHECK(s[1] == make_rational(m - 1, 2));
    CHECK(s[2] == make_rational(static_cast<long>(m) * m - 1, 12));
  }
  CHECK(deg_series(DegKind::euler, 1, 1, 2).coeffs == Series{1, Rational(1, 2)});
  CHECK(parse_deg_kind("euler") == DegKind::euler);
  CHECK_THROWS(parse_deg_kind("catalan"));
}

TEST_CASE("deg_series about -1") {
  // 2/(1-x^3) about -1: value 1 at x = -1.
  const auto e = deg_series(DegKind::euler, -1, 3, 4);
  CHECK(e.coeffs[0] == 1);
  const auto b = deg_series(DegKind::bernoulli, -1, 4, 4);
  CHECK(b.coeffs[0] == 1);
  const auto b2 = deg_series(DegKind::bernoulli, -1, 2, 5);
  CHECK(b2.coeffs == Series{1, Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)});
  CHECK_THROWS(deg_series(DegKind::euler, -1, 4, 3));
  CHECK_THROWS(deg_series(DegKind::bernoulli, -1, 3, 3));
  CHECK_THROWS(deg_series(DegKind::bernoulli, 2, 3, 3));
  CHECK_THROWS(deg_series(DegKind::bernoulli, 1, 0, 3));
  CHECK_THROWS(deg_series(DegKind::bernoulli, 1, 3, 0));
}

TEST_CASE("w1 closed form") {
  CHECK(w1_coeffs(1) == std::vector<Rational>{1});
  CHECK(w1_coeffs(2) == std::vector<Rational>{Rational(1, 4), Rational(1, 2)});
  CHECK(w1_coeffs(3).back() == Rational(1, 6));
  for (unsigned N = 1; N <= 12; ++N) {
    const auto table = gamma_table(N);
    const auto w1 = w1_coeffs(N);
    for (unsigned l = 1; l <= N; ++l) CHECK(w1[l - 1] == table.at(0, 1, l));
  }
}

TEST_CASE("w2 closed form") {
  CHECK(w2_coeffs(2) == std::vector<Rational>{Rational(1, 4)});
  CHECK(w2_coeffs(4).back() == Rational(1, 32));
  CHECK(w2_coeffs(3) == decompose_variant_k2(3).entries);
  CHECK_THROWS(w2_coeffs(1));
  for (unsigned N = 2; N <= 12; ++N) CHECK(w2_coeffs(N) == decompose_variant_k2(N).entries);
  for (unsigned N = 2; N <= 14; ++N) {
    Rational lead = 1;
    for (unsigned m = 1; m <= N; ++m) lead *= w2_factor(m, 1)[0];
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, N);
    den *= factorial(N / 2);
    CHECK(lead == make_rational(Integer(1), den));
  }
}

TEST_CASE("recurrences") {
  for (unsigned N = 1; N <= 10; ++N) CHECK(w1_recurrence_check(N));
  for (unsigned N = 2; N <= 10; ++N) CHECK(w2_recurrence_check(N));
  CHECK_THROWS(w1_recurrence_check(0));
  CHECK_THROWS(w2_recurrence_check(1));
}
