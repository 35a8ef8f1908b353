#pragma once

#include <string>
#include <vector>

#include "qwave/rational.hpp"

namespace qwave {

/// Ramanujan sum c_k(t) = sum_{d | gcd(t, k)} d * mu(k/d). Any integer t.
Integer ramanujan_sum(unsigned k, long t);

/// k x k table of Gaussian-Ramanujan sums
///   sigma_k(t; j) = sum_{xi primitive k-th root} xi^{-t} (1 - xi)(1 - xi^2)...(1 - xi^j),
/// canonical on 0 <= t, j < k.
class SigmaTable {
 public:
  explicit SigmaTable(unsigned k);  // the O(k^2) recurrence

  unsigned k() const { return k_; }
  /// t is reduced mod k; 0 <= j < k.
  const Integer& at(long t, unsigned j) const;
  const std::vector<Integer>& row(unsigned t) const { return values_.at(t); }

 private:
  unsigned k_;
  std::vector<std::vector<Integer>> values_;  // [t][j]
};

inline SigmaTable sigma_table(unsigned k) { return SigmaTable(k); }

/// Independent route: reduce x^{(-t) mod k} * prod_{i<=j}(1 - x^i) modulo
/// x^k - 1 to sum_s a_s x^s and return sum_s a_s c_k(s).
Integer sigma_sieved(unsigned k, long t, unsigned j);

/// Whole table by the sieved route, sharing the running product across t.
std::vector<std::vector<Integer>> sigma_sieved_table(unsigned k);

struct BoundCheck {
  std::string name;
  Integer worst;  // max |sigma| over t
  Integer bound;
  bool pass = true;
};

/// |sigma_k(t;0)| <= phi(k), |sigma_k(t;1)| <= 2 phi(k), |sigma_k(t;k-1)| <= k phi(k),
/// |sigma_k(t;k-2)| <= k^2 (k-1) phi(k) / 2. Only bounds whose column exists are listed.
std::vector<BoundCheck> sigma_bounds_check(unsigned k);

/// Gamma_{j,k,floor(N/k)}(N) = sigma_k(-j; k-1-(N mod k)) / (k^{floor(N/k)+2} floor(N/k)!).
Rational gamma_top_fast(unsigned j, unsigned k, unsigned N);
Rational gamma_top_fast(unsigned j, unsigned N, const SigmaTable& table);

}  // namespace qwave
