#pragma once

#include <string_view>
#include <vector>

#include "qwave/series.hpp"

namespace qwave {

enum class DegKind { bernoulli, euler };

/// Raw Taylor coefficients t_0, t_1, ... of
///   bernoulli, center +1:  m(1-x)/(1-x^m)  in powers of (1-x)
///   euler,     center +1:  2/(1+x^m)       in powers of (1-x)
///   euler,     center -1:  2/(1-x^m)       in powers of (1+x), m odd
///   bernoulli, center -1:  m(1+x)/(1-x^m)  in powers of (1+x), m even
/// Every variant has t_0 = 1.
struct DegSeries {
  unsigned m = 0;
  int center = 1;
  DegKind kind = DegKind::bernoulli;
  Series coeffs;
};

DegSeries deg_series(DegKind kind, int center, unsigned m, std::size_t order);
DegKind parse_deg_kind(std::string_view name);
std::string_view to_string(DegKind kind);

/// Gamma_{01l}(N) for l = 1..N (element l-1), as (1/N!) [u^{N-l}] prod_{i=2}^N S_i(u)
/// with S_i the bernoulli/+1 series of i.
std::vector<Rational> w1_coeffs(unsigned N);

/// Gt_{02l}(N) for l = 1..floor(N/2) (element l-1), as [u^{M-l}] prod_{m=1}^N T_m(u),
/// T_m = euler/-1 series / 2 (m odd), bernoulli/-1 series / m (m even).
std::vector<Rational> w2_coeffs(unsigned N);

/// Factor T_m of the second-wave product, truncated to `order`.
Series w2_factor(unsigned m, std::size_t order);

/// prod_{i=2}^N S_i / N!, i.e. (1-x)^N F_N in powers of (1-x), to `order` terms.
Series w1_local_series(unsigned N, std::size_t order);
/// prod_{m=1}^N T_m, i.e. (1+x)^{N/2} F_N in powers of (1+x), to `order` terms.
Series w2_local_series(unsigned N, std::size_t order);

/// Gamma_{01(N+1-i)}(N+1) = (1/(N+1)) sum_{k<=i} t_k(N+1) A_{i-k}(N), i = 0..N, where
/// A_j(N) are the coefficients of w1_local_series(N) (A_N is the first regular one).
bool w1_recurrence_check(unsigned N);

/// Gt_{02(M'-j)}(N+1) = sum_{k<=j} T_{N+1,k} A_{j-k}(N), j < M' = floor((N+1)/2),
/// with A_j(N) the coefficients of w2_local_series(N).
bool w2_recurrence_check(unsigned N);

}  // namespace qwave
