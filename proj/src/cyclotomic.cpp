#include "qwave/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qwave {

namespace {

struct CycloCache {
  std::mutex mutex;
  // unique_ptr keeps returned references stable across insertions.
  std::map<unsigned, std::unique_ptr<const Poly>> table;
};

CycloCache& cache() {
  static CycloCache c;
  return c;
}

Poly compute_cyclotomic(unsigned n) {
  if (n == 1) return Poly::one_minus_xpow(1);
  Poly p = Poly::one_minus_xpow(n);
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    p = exact_div(p, cyclotomic(d));
  }
  // 1 - x^n over the proper divisors leaves -x^phi + ... for n > 1; flip to monic.
  return p.monic();
}

// Extended Euclid on integers: returns (g, s, t) with a*s + b*t = g.
struct IntXgcd {
  long g, s, t;
};

IntXgcd int_xgcd(long a, long b) {
  long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    long q = a / b;
    long r = a - q * b;
    a = b;
    b = r;
    long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return {a, s0, t0};
}

Poly xpow_minus_one(unsigned long e) {
  // x^e - 1
  return -Poly::one_minus_xpow(e);
}

bool verifies(const Poly& u, const Poly& phi_m, const Poly& v, const Poly& phi_n) {
  return u * phi_m + v * phi_n == Poly::constant(1);
}

// Polynomial division that reports failure instead of throwing.
bool try_exact_div(const Poly& a, const Poly& b, Poly& out) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) return false;
  out = std::move(q);
  return true;
}

}  // namespace

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

const Poly& cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    auto it = c.table.find(n);
    if (it != c.table.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters cyclotomic() for divisors.
  auto computed = std::make_unique<const Poly>(compute_cyclotomic(n));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.table.try_emplace(n, std::move(computed));
  return *it->second;
}

Poly inverse_cyclotomic(unsigned n) { return exact_div(Poly::one_minus_xpow(n), cyclotomic(n)); }

Poly psi(unsigned m) {
  if (m == 0) throw std::invalid_argument("psi index must be >= 1");
  return Poly(std::vector<Rational>(m, Rational(1)));
}

Poly monomial_rem_cyclotomic(unsigned long k, unsigned m) {
  if (m < 2) throw std::invalid_argument("monomial_rem_cyclotomic requires m >= 2");
  unsigned long e = k % m;
  bool negate = false;
  if (m % 2 == 0 && e >= m / 2) {
    // x^{m/2} = -1 modulo Phi_m for even m
    e -= m / 2;
    negate = true;
  }
  Poly r = Poly::monomial(Rational(1), e) % cyclotomic(m);
  return negate ? -r : r;
}

Poly monomial_rem_binomial(unsigned long k, unsigned m) {
  if (m == 0) throw std::invalid_argument("monomial_rem_binomial requires m >= 1");
  return Poly::monomial(Rational(1), k % m);
}

Bezout dresden_bezout(unsigned m, unsigned n) {
  if (m == 0 || m >= n) throw std::invalid_argument("dresden_bezout requires 0 < m < n");
  const Poly& phi_m = cyclotomic(m);
  const Poly& phi_n = cyclotomic(n);

  Poly u, v;
  bool ok = false;
  if (n % m != 0) {
    // d = n*s - m*t with s, t > 0
    const auto [d, s0, t0] = int_xgcd(static_cast<long>(n), static_cast<long>(m));
    long s = s0, t = -t0;
    const long step_s = static_cast<long>(m) / d, step_t = static_cast<long>(n) / d;
    while (s <= 0 || t <= 0) {
      s += step_s;
      t += step_t;
    }
    const Poly xd_minus_one = xpow_minus_one(static_cast<unsigned long>(d));
    const Poly sign_xd = Poly::monomial(d % 2 == 0 ? Rational(1) : Rational(-1), d);
    Poly uq, vq;
    ok = try_exact_div(xpow_minus_one(static_cast<unsigned long>(m * t)), xd_minus_one * phi_m, uq) &&
         try_exact_div(xpow_minus_one(static_cast<unsigned long>(n * s)), xd_minus_one * phi_n, vq);
    if (ok) {
      u = sign_xd * uq;
      v = std::move(vq);
    }
  } else {
    const Poly& phi_q = cyclotomic(n / m);
    const Rational at_one = phi_q(Rational(1));
    const Poly inflated = phi_q.inflate(m);
    Poly uq, vq;
    ok = try_exact_div(-(inflated - Poly::constant(at_one)), phi_m, uq) &&
         try_exact_div(inflated, phi_n, vq);
    if (ok) {
      const Rational inv = 1 / at_one;
      u = uq * inv;
      v = vq * inv;
    }
  }
  if (ok && verifies(u, phi_m, v, phi_n)) return {std::move(u), std::move(v), true};

  auto fallback = xgcd(phi_m, phi_n);
  if (fallback.g != Poly::constant(1)) throw std::logic_error("cyclotomic polynomials not coprime");
  return {std::move(fallback.u), std::move(fallback.v), false};
}

}  // namespace qwave
