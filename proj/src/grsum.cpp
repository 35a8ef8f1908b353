#include "qwave/grsum.hpp"

#include <numeric>
#include <stdexcept>

#include "qwave/cyclotomic.hpp"

namespace qwave {

namespace {

unsigned reduce_mod(long t, unsigned k) {
  const long m = static_cast<long>(k);
  return static_cast<unsigned>(((t % m) + m) % m);
}

std::vector<Integer> ramanujan_column(unsigned k) {
  std::vector<Integer> c(k);
  for (unsigned t = 0; t < k; ++t) c[t] = ramanujan_sum(k, t);
  return c;
}

// sum_s a_s c_k(s + shift)
Integer contract(const std::vector<Integer>& a, const std::vector<Integer>& c, unsigned shift) {
  const unsigned k = static_cast<unsigned>(c.size());
  Integer acc;
  for (unsigned s = 0; s < k; ++s) {
    if (sgn(a[s]) == 0) continue;
    mpz_addmul(acc.get_mpz_t(), a[s].get_mpz_t(), c[(s + shift) % k].get_mpz_t());
  }
  return acc;
}

// a <- a * (1 - x^i) mod x^k - 1
void multiply_one_minus(std::vector<Integer>& a, unsigned i) {
  const unsigned k = static_cast<unsigned>(a.size());
  const std::vector<Integer> prev = a;
  for (unsigned s = 0; s < k; ++s) a[(s + i) % k] -= prev[s];
}

}  // namespace

Integer ramanujan_sum(unsigned k, long t) {
  if (k == 0) throw std::invalid_argument("ramanujan_sum requires k >= 1");
  const unsigned g = std::gcd(reduce_mod(t, k), k);  // gcd(0, k) = k
  Integer acc;
  for (unsigned d : divisors(g)) acc += Integer(static_cast<long>(d) * mobius(k / d));
  return acc;
}

SigmaTable::SigmaTable(unsigned k) : k_(k) {
  if (k == 0) throw std::invalid_argument("sigma_table requires k >= 1");
  values_.assign(k, std::vector<Integer>(k));
  for (unsigned t = 0; t < k; ++t) values_[t][0] = ramanujan_sum(k, t);
  for (unsigned j = 1; j < k; ++j) {
    for (unsigned t = 0; t < k; ++t) {
      const unsigned shifted = (t + k - j % k) % k;
      values_[t][j] = values_[t][j - 1] - values_[shifted][j - 1];
    }
  }
}

const Integer& SigmaTable::at(long t, unsigned j) const {
  if (j >= k_) throw std::out_of_range("sigma index j must be < k");
  return values_[reduce_mod(t, k_)][j];
}

Integer sigma_sieved(unsigned k, long t, unsigned j) {
  if (k == 0) throw std::invalid_argument("sigma_sieved requires k >= 1");
  if (j >= k) throw std::invalid_argument("sigma_sieved requires j < k");
  std::vector<Integer> a(k);
  a[reduce_mod(-t, k)] = 1;
  for (unsigned i = 1; i <= j; ++i) multiply_one_minus(a, i % k);
  return contract(a, ramanujan_column(k), 0);
}

std::vector<std::vector<Integer>> sigma_sieved_table(unsigned k) {
  if (k == 0) throw std::invalid_argument("sigma_sieved_table requires k >= 1");
  const auto c = ramanujan_column(k);
  std::vector<std::vector<Integer>> out(k, std::vector<Integer>(k));
  std::vector<Integer> product(k);
  product[0] = 1;
  for (unsigned j = 0; j < k; ++j) {
    if (j > 0) multiply_one_minus(product, j % k);
    // x^{-t} shifts exponent s to s - t, so sum_s a_s c_k(s - t).
    for (unsigned t = 0; t < k; ++t) out[t][j] = contract(product, c, (k - t) % k);
  }
  return out;
}

std::vector<BoundCheck> sigma_bounds_check(unsigned k) {
  const SigmaTable table(k);
  const Integer phi = euler_phi(k);
  const Integer kk = k;
  std::vector<BoundCheck> out;
  auto check = [&](std::string name, unsigned j, Integer bound) {
    Integer worst;
    for (unsigned t = 0; t < k; ++t) {
      Integer v = abs(table.at(t, j));
      if (v > worst) worst = v;
    }
    out.push_back({std::move(name), worst, bound, worst <= bound});
  };
  check("|sigma(t;0)| <= phi(k)", 0, phi);
  if (k >= 2) check("|sigma(t;1)| <= 2 phi(k)", 1, 2 * phi);
  check("|sigma(t;k-1)| <= k phi(k)", k - 1, kk * phi);
  if (k >= 2) check("|sigma(t;k-2)| <= k^2 (k-1) phi(k) / 2", k - 2, kk * kk * (kk - 1) * phi / 2);
  return out;
}

Rational gamma_top_fast(unsigned j, unsigned N, const SigmaTable& table) {
  const unsigned k = table.k();
  if (k == 0 || k > N) throw std::invalid_argument("gamma_top_fast requires 1 <= k <= N");
  if (j >= k) throw std::invalid_argument("gamma_top_fast requires 0 <= j < k");
  const unsigned L = N / k;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), k, L + 2);
  den *= factorial(L);
  return make_rational(table.at(-static_cast<long>(j), k - 1 - N % k), den);
}

Rational gamma_top_fast(unsigned j, unsigned k, unsigned N) {
  if (k == 0 || k > N) throw std::invalid_argument("gamma_top_fast requires 1 <= k <= N");
  return gamma_top_fast(j, N, SigmaTable(k));
}

}  // namespace qwave
