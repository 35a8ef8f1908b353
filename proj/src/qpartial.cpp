#include "qwave/qpartial.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "qwave/cyclotomic.hpp"
#include "qwave/evalop.hpp"

namespace qwave {

const Poly& QPFDecomposition::g(unsigned k, unsigned l) const {
  auto it = terms_.find({k, l});
  if (it == terms_.end()) throw std::out_of_range("no g_{kl} for this (k, l)");
  return it->second;
}

GammaTable::GammaTable(const QPFDecomposition& d) : N_(d.N()) {
  for (const auto& [key, g] : d.terms()) {
    const auto [k, l] = key;
    for (unsigned h = 0; h < k; ++h) entries_[{h, k, l}] = g.coeff(h);
  }
}

Rational GammaTable::at(unsigned h, unsigned k, unsigned l) const {
  auto it = entries_.find({h, k, l});
  return it == entries_.end() ? Rational(0) : it->second;
}

Poly h_component(unsigned N, unsigned k) {
  if (k == 0 || k > N) throw std::invalid_argument("h_component requires 1 <= k <= N");
  const unsigned L = N / k;
  const Poly& phi_k = cyclotomic(k);
  const Poly modulus = pow(phi_k, L);
  const bool linear = phi_k.degree() == 1;

  Poly acc = Poly::constant(1);
  for (unsigned j = 1; j <= N; ++j) {
    if (j == k) continue;
    const Poly inv = linear ? eval_power(RationalPolyExpr::reciprocal(cyclotomic(j)), phi_k, L)
                            : eval_inverse_cyclotomic(j, k, L);
    acc = (acc * powmod(inv, N / j, modulus)) % modulus;
  }
  return acc;
}

Poly dm_derivative(const Poly& h, unsigned m) {
  if (m == 0) throw std::invalid_argument("D_m requires m >= 1");
  if (h.size() <= m) return {};
  std::vector<Rational> out(h.size() - m);
  for (std::size_t e = m; e < h.size(); ++e) out[e - m] = h.coeffs()[e] * static_cast<unsigned long>(e / m);
  return Poly(std::move(out));
}

std::vector<Poly> split_levels(const Poly& g, unsigned m, unsigned r) {
  if (m == 0 || r == 0) throw std::invalid_argument("split_levels requires m, r >= 1");
  if (g.degree() >= static_cast<long>(r) * m) throw std::invalid_argument("split_levels requires deg g < r*m");
  std::vector<Poly> levels;
  levels.reserve(r);
  Poly current = g;
  for (unsigned j = 0; j < r; ++j) {
    if (j > 0) current = dm_derivative(current, m);
    // rem (1 - x^m) folds each exponent e onto e mod m.
    std::vector<Rational> folded(m);
    for (std::size_t e = 0; e < current.size(); ++e) folded[e % m] += current.coeffs()[e];
    levels.emplace_back(std::move(folded));
  }
  return levels;
}

QPFDecomposition decompose(unsigned N) {
  if (N == 0) throw std::invalid_argument("decompose requires N >= 1");
  QPFDecomposition d(N);
  for (unsigned k = 1; k <= N; ++k) {
    const unsigned L = N / k;
    const Poly g_k = pow(inverse_cyclotomic(k), L) * h_component(N, k);
    const auto levels = split_levels(g_k, k, L);
    Integer j_fact = 1;
    for (unsigned j = 0; j < L; ++j) {
      if (j > 0) j_fact *= j;
      Rational scale = make_rational(j % 2 == 0 ? Integer(1) : Integer(-1), j_fact);
      d.set(k, L - j, levels[j] * scale);
    }
  }
  return d;
}

VariantK2Table decompose_variant_k2(unsigned N) {
  if (N < 2) throw std::invalid_argument("decompose_variant_k2 requires N >= 2");
  const unsigned M = N / 2;
  const Poly one_plus_x{1, 1};
  Poly denominator = Poly::constant(1);
  for (unsigned j = 1; j <= N; ++j) denominator *= Poly::one_minus_xpow(j);
  denominator = exact_div(denominator, pow(one_plus_x, M));
  const Poly local = eval_mod(RationalPolyExpr::reciprocal(denominator), pow(one_plus_x, M));
  const Poly in_powers = taylor_shift(local, Rational(-1));  // powers of (1 + x)

  VariantK2Table table;
  table.N = N;
  table.entries.resize(M);
  for (unsigned l = 1; l <= M; ++l) table.entries[l - 1] = in_powers.coeff(M - l);
  return table;
}

RademacherTop rademacher_top(unsigned h, unsigned k, unsigned N) {
  if (k == 0 || k > N) throw std::invalid_argument("rademacher_top requires 1 <= k <= N");
  if (h >= k) throw std::invalid_argument("rademacher_top requires 0 <= h < k");
  if (std::gcd(h, k) != 1) throw std::invalid_argument("rademacher_top requires gcd(h, k) = 1");
  const unsigned L = N / k;
  const CycloFieldElement xi = CycloFieldElement::generator_power(k, h);
  const CycloFieldElement one = CycloFieldElement::one(k);

  CycloFieldElement denom = one;
  for (unsigned m = 1; m <= N; ++m) {
    if (m % k == 0) continue;
    denom *= one - xi.pow(m);
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), k, L);
  scale *= factorial(L);
  denom *= Rational(scale);

  RademacherTop top;
  top.h = h;
  top.k = k;
  top.N = N;
  top.value = (-xi).pow(L) * denom.inverse();
  // Exact zero tests via the conjugate x -> x^{-1}, so cancellation noise never prints.
  CycloFieldElement conj = CycloFieldElement::zero(k);
  const auto coords = top.value.coords();
  for (unsigned i = 0; i < coords.size(); ++i) conj += CycloFieldElement::generator_power(k, (k - i) % k) * coords[i];
  const auto z = top.value.approximate();
  auto fmt = [](double v, bool exact_zero) {
    if (exact_zero) return std::string("0");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  top.real_approx = fmt(z.real(), top.value + conj == CycloFieldElement::zero(k));
  top.imag_approx = fmt(z.imag(), top.value == conj);
  return top;
}

std::pair<CycloFieldElement, CycloFieldElement> rademacher_link(const QPFDecomposition& d, unsigned h, unsigned k) {
  const unsigned L = d.N() / k;
  const auto top = rademacher_top(h, k, d.N());
  const CycloFieldElement xi = CycloFieldElement::generator_power(k, h);
  const CycloFieldElement factor = (xi.inverse() * Rational(-static_cast<long>(k))).pow(L);
  return {evaluate_at_root(d.g(k, L), k, h), top.value * factor};
}

}  // namespace qwave
