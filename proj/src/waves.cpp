#include "qwave/waves.hpp"

#include <stdexcept>

#include "qwave/grsum.hpp"

namespace qwave {

namespace {

Rational wave_sum(unsigned long q, unsigned h, unsigned k, unsigned L, const GammaTable& table) {
  Rational acc;
  const Integer qz = static_cast<unsigned long>(q);
  for (unsigned l = 1; l <= L; ++l) {
    const Rational& g = table.at(h, k, l);
    if (sgn(g) == 0) continue;
    acc += Rational(binomial(qz + (l - 1), l - 1)) * g;
  }
  return acc;
}

Rational factorial_q(unsigned n) { return Rational(factorial(n)); }

}  // namespace

Rational wave_eval(unsigned k, unsigned long n, unsigned N, const GammaTable& table) {
  if (k == 0 || k > N) throw std::invalid_argument("wave_eval requires 1 <= k <= N");
  return wave_sum(n / k, static_cast<unsigned>(n % k), k, N / k, table);
}

Integer partition_via_waves(unsigned long n, const GammaTable& table) {
  const unsigned N = table.N();
  Rational total;
  for (unsigned k = 1; k <= N; ++k) total += wave_eval(k, n, N, table);
  if (!is_integer(total))
    throw std::logic_error("wave sum is not an integer for n = " + std::to_string(n) + ", N = " +
                           std::to_string(N) + ": " + to_string(total));
  return total.get_num();
}

Integer partition_via_waves(unsigned long n, unsigned N) {
  if (N == 0) throw std::invalid_argument("partition_via_waves requires N >= 1");
  return partition_via_waves(n, gamma_table(N));
}

WaveTopTerm wave_top_term(unsigned k, unsigned N) {
  if (k == 0 || k > N) throw std::invalid_argument("wave_top_term requires 1 <= k <= N");
  const SigmaTable sigma(k);
  WaveTopTerm top;
  top.k = k;
  top.N = N;
  top.degree = N / k - 1;
  for (unsigned j = 0; j < k; ++j) top.coefficient.push_back(gamma_top_fast(j, N, sigma));
  return top;
}

Rational w2_closed_eval(unsigned long n, unsigned N, const VariantK2Table& table) {
  if (N < 2) throw std::invalid_argument("w2_closed_eval requires N >= 2");
  Rational acc;
  const Integer nz = static_cast<unsigned long>(n);
  for (unsigned l = 1; l <= table.entries.size(); ++l) acc += Rational(binomial(nz + (l - 1), l - 1)) * table.at(l);
  return n % 2 == 0 ? acc : Rational(-acc);
}

Rational w1_display(unsigned N, unsigned index) {
  switch (index) {
    case 0:
      return 1 / factorial_q(N);
    case 1:
      return 1 / (2 * factorial_q(N - 2));
    case 2: {
      const long n = N;
      return Rational(-(9 * n * n - 11 * n - 5)) / (144 * factorial_q(N - 2));
    }
  }
  throw std::out_of_range("w1_display index must be 0, 1 or 2");
}

Rational w2_h1_display(unsigned N) {
  const long M = N / 2;
  if (N % 2 == 0) return make_rational(3 * M * M, 4);
  return make_rational(3 * M * M + 2 * M + 2, 4);
}

Rational w2_h2_display(unsigned N) {
  const Rational M(static_cast<long>(N / 2));
  Rational v = M * M * M / 18 + 5 * M * M / 12;
  if (N % 2 == 0) return v + M / 36;
  return v + 19 * M / 36 + Rational(1, 4);
}

const TruncationTerm& TruncationReport::term(const std::string& wave, unsigned index) const {
  for (const auto& t : terms)
    if (t.wave == wave && t.index == index) return t;
  throw std::out_of_range("no truncation term " + wave + "[" + std::to_string(index) + "]");
}

TruncationReport w1_w2_truncation_report(unsigned N) {
  if (N < 6) throw std::invalid_argument("truncation report requires N >= 6");
  const GammaTable table = gamma_table(N);
  const VariantK2Table variant = decompose_variant_k2(N);
  const unsigned M = N / 2;

  TruncationReport report;
  report.N = N;
  const char* w1_labels[] = {"1/N!", "1/(2(N-2)!)", "-(9N^2-11N-5)/(144(N-2)!)"};
  for (unsigned i = 0; i < 3; ++i) {
    TruncationTerm t{"W1", i, w1_labels[i], table.at(0, 1, N - i), w1_display(N, i), false};
    t.match = t.computed == t.displayed;
    report.terms.push_back(std::move(t));
  }

  Integer scale_z;
  mpz_ui_pow_ui(scale_z.get_mpz_t(), 2, N);
  scale_z *= factorial(M);
  const Rational scale(scale_z);
  const Rational w2_displays[] = {Rational(1), w2_h1_display(N), w2_h2_display(N)};
  const char* w2_labels[] = {"1", "h1(N)", "h2(N)"};
  for (unsigned i = 0; i < 3; ++i) {
    TruncationTerm t{"W2", i, w2_labels[i], variant.at(M - i) * scale, w2_displays[i], false};
    t.match = t.computed == t.displayed;
    report.terms.push_back(std::move(t));
  }

  // binom(n + M - 1, M - 1) contributes n^{M-1} / (M-1)!.
  report.w2_leading_exact = variant.at(M) / factorial_q(M - 1);
  report.w2_leading_degree = M - 1;
  Integer display_den;
  mpz_ui_pow_ui(display_den.get_mpz_t(), 2, M + 1);
  display_den *= factorial(M);
  report.w2_leading_display = make_rational(Integer(1), display_den);
  report.w2_display_degree = M;
  return report;
}

bool quasi_polynomial_check(unsigned k, unsigned r, const GammaTable& table) {
  const unsigned N = table.N();
  if (k == 0 || k > N || r >= k) throw std::invalid_argument("quasi_polynomial_check requires 1 <= k <= N, r < k");
  const unsigned L = N / k;
  auto sample = [&](unsigned long q) { return wave_eval(k, r + k * q, N, table); };

  // Newton forward differences at q = 0 from L samples.
  std::vector<Rational> diffs;
  for (unsigned q = 0; q < L; ++q) diffs.push_back(sample(q));
  for (unsigned d = 1; d < L; ++d)
    for (unsigned i = L - 1; i >= d; --i) diffs[i] -= diffs[i - 1];

  for (unsigned long q = 0; q < 3ul * L; ++q) {
    Rational fitted;
    for (unsigned d = 0; d < L; ++d) fitted += Rational(binomial(Integer(q), d)) * diffs[d];
    if (fitted != sample(q)) return false;
  }
  return true;
}

}  // namespace qwave
