#include "qwave/series.hpp"

#include <stdexcept>

namespace qwave {

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series r(order);
  Rational t;
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) {
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  return r;
}

Series series_inv(const Series& a, std::size_t order) {
  if (a.empty() || sgn(a[0]) == 0) throw std::domain_error("series not invertible");
  Series r(order);
  if (order == 0) return r;
  const Rational inv0 = 1 / a[0];
  r[0] = inv0;
  Rational t;
  for (std::size_t n = 1; n < order; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a[j].get_mpq_t(), r[n - j].get_mpq_t());
      acc += t;
    }
    r[n] = -acc * inv0;
  }
  return r;
}

Series series_div(const Series& num, const Series& den, std::size_t order) {
  return series_mul(num, series_inv(den, order), order);
}

Series truncate(const Poly& p, std::size_t order) {
  Series r(order);
  for (std::size_t i = 0; i < order && i < p.size(); ++i) r[i] = p.coeffs()[i];
  return r;
}

Series taylor_coeffs(const Poly& num, const Poly& den, const Rational& center, std::size_t order) {
  if (order < 1) throw std::invalid_argument("taylor order must be >= 1");
  if (den.is_zero() || sgn(den(center)) == 0) throw std::domain_error("pole at expansion center");
  return series_div(truncate(taylor_shift(num, center), order),
                    truncate(taylor_shift(den, center), order), order);
}

Poly resum(const Series& a, const Rational& center) {
  // Horner in (x - center).
  const Poly step{Poly::x() - Poly::constant(center)};
  Poly acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= step;
    acc += Poly::constant(*it);
  }
  return acc;
}

}  // namespace qwave
