#pragma once

#include <string>
#include <vector>

#include "qwave/qpartial.hpp"

namespace qwave {

struct WaveValue {
  unsigned k = 0;
  unsigned long n = 0;
  unsigned N = 0;
  Rational value;
};

/// W_k(n;N) = sum_{l=1}^{N/k} binom(n/k + l - 1, l - 1) Gamma_{(n%k) k l}(N).
Rational wave_eval(unsigned k, unsigned long n, unsigned N, const GammaTable& table);

/// p_N(n) as the sum of all N waves. Throws std::logic_error if the sum is not an integer.
Integer partition_via_waves(unsigned long n, unsigned N);
Integer partition_via_waves(unsigned long n, const GammaTable& table);

/// Leading binomial term of W_k: Gamma_{jkL}(N) for each residue j = n mod k, and
/// degree L - 1 in n, L = floor(N/k).
struct WaveTopTerm {
  unsigned k = 0, N = 0;
  unsigned degree = 0;
  std::vector<Rational> coefficient;  // indexed by j = n mod k
};
WaveTopTerm wave_top_term(unsigned k, unsigned N);

/// W_2 through the (1+x) form: (-1)^n sum_l binom(n + l - 1, l - 1) Gt_{02l}.
Rational w2_closed_eval(unsigned long n, unsigned N, const VariantK2Table& table);

/// One basis coefficient of a truncated W_1 or W_2 expansion next to its closed-form display.
/// W_2 values are scaled by 2^N floor(N/2)!.
struct TruncationTerm {
  std::string wave;  // "W1" or "W2"
  unsigned index = 0;
  std::string label;
  Rational computed;
  Rational displayed;
  bool match = false;
};

struct TruncationReport {
  unsigned N = 0;
  std::vector<TruncationTerm> terms;
  // Leading term of W_2 in n, sign (-1)^n factored out.
  Rational w2_leading_exact;
  unsigned w2_leading_degree = 0;
  Rational w2_leading_display;
  unsigned w2_display_degree = 0;

  const TruncationTerm& term(const std::string& wave, unsigned index) const;
};

TruncationReport w1_w2_truncation_report(unsigned N);

/// Closed-form displays used by the report.
Rational w1_display(unsigned N, unsigned index);
Rational w2_h1_display(unsigned N);
Rational w2_h2_display(unsigned N);

/// Fits W_k(r + k q; N) as a polynomial in q from floor(N/k) samples (Newton form) and
/// re-evaluates it exactly on 3 floor(N/k) samples of the residue class r.
bool quasi_polynomial_check(unsigned k, unsigned r, const GammaTable& table);

}  // namespace qwave
