#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qwave/rational.hpp"

namespace qwave {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i.
/// Canonical form: no trailing zeros, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(Rational(1), 1); }
  /// 1 - x^m
  static Poly one_minus_xpow(std::size_t m);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& lead() const;

  Rational operator()(const Rational& at) const;
  /// p(x^m)
  Poly inflate(std::size_t m) const;
  /// p(-x)
  Poly reflect() const;
  Poly monic() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error("zero divisor").
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Division that must leave no remainder; throws std::domain_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// u*a + v*b = g with g = gcd(a, b) monic.
struct Xgcd {
  Poly g;
  Poly u;
  Poly v;
};
Xgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& p, unsigned e);
Poly powmod(const Poly& p, unsigned e, const Poly& modulus);

/// Coefficients of q with p(x) = q(x - c), i.e. p expanded in powers of (x - c).
Poly taylor_shift(const Poly& p, const Rational& c);

/// Ascending coefficient strings, the JSON polynomial form.
std::vector<std::string> to_strings(const Poly& p);
std::string to_string(const Poly& p, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qwave
