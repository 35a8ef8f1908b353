#pragma once

#include <vector>

#include "qwave/poly.hpp"

namespace qwave {

/// Truncated power series: element i is the coefficient of t^i.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t order);
/// 1/a mod t^order. Requires a[0] != 0.
Series series_inv(const Series& a, std::size_t order);
Series series_div(const Series& num, const Series& den, std::size_t order);
Series truncate(const Poly& p, std::size_t order);

/// a_0..a_{order-1} with num/den = sum a_n (x - center)^n near center.
/// Throws std::domain_error("pole at expansion center") when den(center) = 0.
Series taylor_coeffs(const Poly& num, const Poly& den, const Rational& center, std::size_t order);

/// sum a_n (x - center)^n as a polynomial in x.
Poly resum(const Series& a, const Rational& center);

}  // namespace qwave
