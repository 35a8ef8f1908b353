#include "qwave/degnum.hpp"

#include <stdexcept>
#include <string>

namespace qwave {

namespace {

// Coefficients in powers of (x - c) flipped to powers of (c - x) when c = +1.
Series to_center_basis(Series s, int center) {
  if (center == 1)
    for (std::size_t n = 1; n < s.size(); n += 2) s[n] = -s[n];
  return s;
}

}  // namespace

DegKind parse_deg_kind(std::string_view name) {
  if (name == "bernoulli") return DegKind::bernoulli;
  if (name == "euler") return DegKind::euler;
  throw std::invalid_argument("unknown degenerate kind '" + std::string(name) + "'");
}

std::string_view to_string(DegKind kind) { return kind == DegKind::bernoulli ? "bernoulli" : "euler"; }

DegSeries deg_series(DegKind kind, int center, unsigned m, std::size_t order) {
  if (m == 0) throw std::invalid_argument("deg_series requires m >= 1");
  if (order == 0) throw std::invalid_argument("deg_series requires order >= 1");
  if (center != 1 && center != -1) throw std::invalid_argument("deg_series center must be +1 or -1");
  if (center == -1 && kind == DegKind::euler && m % 2 == 0)
    throw std::invalid_argument("euler series about -1 requires odd m");
  if (center == -1 && kind == DegKind::bernoulli && m % 2 == 1)
    throw std::invalid_argument("bernoulli series about -1 requires even m");

  const Rational c(center);
  const Poly zero_factor{-static_cast<long>(center), 1};  // x - c
  Poly num, den;
  if (kind == DegKind::bernoulli) {
    // m(1 - c x)/(1 - x^m): the simple zero at c cancels exactly.
    num = exact_div(Poly{static_cast<long>(m), -static_cast<long>(m) * center}, zero_factor);
    den = exact_div(Poly::one_minus_xpow(m), zero_factor);
  } else if (center == 1) {
    num = Poly::constant(2);
    den = Poly::constant(1) + Poly::monomial(Rational(1), m);
  } else {
    num = Poly::constant(2);
    den = Poly::one_minus_xpow(m);
  }
  return {m, center, kind, to_center_basis(taylor_coeffs(num, den, c, order), center)};
}

Series w1_local_series(unsigned N, std::size_t order) {
  if (N == 0) throw std::invalid_argument("w1 requires N >= 1");
  Series acc(order);
  if (order > 0) acc[0] = 1;
  for (unsigned i = 2; i <= N; ++i) acc = series_mul(acc, deg_series(DegKind::bernoulli, 1, i, order).coeffs, order);
  const Rational inv = make_rational(Integer(1), factorial(N));
  for (auto& a : acc) a *= inv;
  return acc;
}

std::vector<Rational> w1_coeffs(unsigned N) {
  const Series local = w1_local_series(N, N);
  std::vector<Rational> out(N);
  for (unsigned l = 1; l <= N; ++l) out[l - 1] = local[N - l];
  return out;
}

Series w2_factor(unsigned m, std::size_t order) {
  if (m % 2 == 1) {
    Series s = deg_series(DegKind::euler, -1, m, order).coeffs;
    for (auto& a : s) a /= 2;
    return s;
  }
  Series s = deg_series(DegKind::bernoulli, -1, m, order).coeffs;
  for (auto& a : s) a /= m;
  return s;
}

Series w2_local_series(unsigned N, std::size_t order) {
  if (N < 2) throw std::invalid_argument("w2 requires N >= 2");
  Series acc(order);
  if (order > 0) acc[0] = 1;
  for (unsigned m = 1; m <= N; ++m) acc = series_mul(acc, w2_factor(m, order), order);
  return acc;
}

std::vector<Rational> w2_coeffs(unsigned N) {
  const unsigned M = N / 2;
  const Series local = w2_local_series(N, M);
  std::vector<Rational> out(M);
  for (unsigned l = 1; l <= M; ++l) out[l - 1] = local[M - l];
  return out;
}

bool w1_recurrence_check(unsigned N) {
  if (N == 0) throw std::invalid_argument("w1 recurrence requires N >= 1");
  const Series prev = w1_local_series(N, N + 1);
  const Series t = deg_series(DegKind::bernoulli, 1, N + 1, N + 1).coeffs;
  const auto next = w1_coeffs(N + 1);
  for (unsigned i = 0; i <= N; ++i) {
    Rational rhs;
    for (unsigned k = 0; k <= i; ++k) rhs += t[k] * prev[i - k];
    rhs /= N + 1;
    if (rhs != next[N - i]) return false;  // Gamma_{01(N+1-i)} sits at index N-i
  }
  return true;
}

bool w2_recurrence_check(unsigned N) {
  if (N < 2) throw std::invalid_argument("w2 recurrence requires N >= 2");
  const unsigned M_next = (N + 1) / 2;
  const Series prev = w2_local_series(N, M_next);
  const Series t = w2_factor(N + 1, M_next);
  const auto next = w2_coeffs(N + 1);
  for (unsigned j = 0; j < M_next; ++j) {
    Rational rhs;
    for (unsigned k = 0; k <= j; ++k) rhs += t[k] * prev[j - k];
    if (rhs != next[M_next - 1 - j]) return false;
  }
  return true;
}

}  // namespace qwave
