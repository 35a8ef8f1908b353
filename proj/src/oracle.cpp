#include "qwave/oracle.hpp"

#include <stdexcept>

namespace qwave {

PartitionTable p_dp(unsigned N, unsigned long n_max) {
  if (N == 0) throw std::invalid_argument("p_dp requires N >= 1");
  PartitionTable t;
  t.N = N;
  t.counts.assign(n_max + 1, Integer(0));
  t.counts[0] = 1;
  for (unsigned part = 1; part <= N; ++part)
    for (unsigned long n = part; n <= n_max; ++n) t.counts[n] += t.counts[n - part];
  return t;
}

Series series_of_FN(unsigned N, std::size_t T) {
  if (T == 0) throw std::invalid_argument("series_of_FN requires T >= 1");
  Series den(T);
  den[0] = 1;
  for (unsigned k = 1; k <= N; ++k) den = series_mul(den, truncate(Poly::one_minus_xpow(k), T), T);
  return series_inv(den, T);
}

ReconstructionResult check_reconstruction(const QPFDecomposition& d, std::size_t T) {
  const unsigned N = d.N();
  ReconstructionResult result;

  // Cheap gate: sum_{k,l} g_{kl} (1 - x^k)^{-l} against the series of F_N.
  Series total(T);
  for (const auto& [key, g] : d.terms()) {
    const auto [k, l] = key;
    Series inv = series_inv(truncate(pow(Poly::one_minus_xpow(k), l), T), T);
    const Series term = series_mul(truncate(g, T), inv, T);
    for (std::size_t i = 0; i < T; ++i) total[i] += term[i];
  }
  const PartitionTable expected = p_dp(N, T - 1);
  for (std::size_t i = 0; i < T; ++i) {
    if (total[i] != Rational(expected.counts[i])) {
      result.witness = i;
      result.message = "series mismatch at x^" + std::to_string(i) + ": got " + to_string(total[i]) +
                       ", expected " + to_string(expected.counts[i]);
      return result;
    }
  }

  // Exact identity with denominators cleared.
  Poly full = Poly::constant(1);
  for (unsigned j = 1; j <= N; ++j) full *= Poly::one_minus_xpow(j);
  Poly sum;
  for (const auto& [key, g] : d.terms()) {
    const auto [k, l] = key;
    sum += g * exact_div(full, pow(Poly::one_minus_xpow(k), l));
  }
  if (sum != Poly::constant(1)) {
    result.message = "cleared identity differs from 1: " + to_string(sum);
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace qwave
