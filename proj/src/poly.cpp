#include "qwave/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qwave {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return make_rational(Integer(text.substr(0, slash)), den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& n, unsigned k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Rational pow(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus_xpow(std::size_t m) {
  std::vector<Rational> v(m + 1);
  v[0] += 1;
  v[m] -= 1;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::inflate(std::size_t m) const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v((coeffs_.size() - 1) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * m] = coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return {};
  Rational inv = 1 / lead();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      v[i + j] += t;
    }
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.degree() < b.degree()) return {Poly{}, a};
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv_lead = 1 / bc[db];
  Rational t;
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational q = rem[i + db] * inv_lead;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      mpq_mul(t.get_mpq_t(), q.get_mpq_t(), bc[j].get_mpq_t());
      rem[i + j] -= t;
    }
    quo[i] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("xgcd of two zero polynomials");
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(1), u1;
  Poly v0, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const Rational inv = 1 / r0.lead();
  return {r0 * inv, u0 * inv, v0 * inv};
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly powmod(const Poly& p, unsigned e, const Poly& modulus) {
  Poly result = Poly::constant(1) % modulus;
  Poly base = p % modulus;
  while (e > 0) {
    if (e & 1u) result = (result * base) % modulus;
    e >>= 1;
    if (e > 0) base = (base * base) % modulus;
  }
  return result;
}

Poly taylor_shift(const Poly& p, const Rational& c) {
  // Horner in the shifted basis: q <- q*(u + c) + a_i.
  std::vector<Rational> q(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = q.size();
  if (sgn(c) == 0 || n < 2) return p;
  Rational t;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), q[j].get_mpq_t());
      q[j - 1] += t;
    }
  }
  return Poly(std::move(q));
}

std::vector<std::string> to_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << to_string(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace qwave
