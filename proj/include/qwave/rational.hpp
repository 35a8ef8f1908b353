#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qwave {

// GMP keeps mpq_class canonical after every arithmetic operation; values built
// from a raw numerator/denominator pair must go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Inverse of to_string; accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(const Integer& n, unsigned k);
Rational pow(const Rational& base, unsigned e);

}  // namespace qwave
