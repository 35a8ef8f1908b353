#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwave/qpartial.hpp"
#include "qwave/series.hpp"

namespace qwave {

/// counts[n] = p_N(n), partitions of n into parts <= N.
struct PartitionTable {
  unsigned N = 0;
  std::vector<Integer> counts;
};

/// Coin DP adding parts 1..N in turn. Integer arithmetic only.
PartitionTable p_dp(unsigned N, unsigned long n_max);

/// First T coefficients of 1/prod_{k<=N}(1 - x^k) by truncated series inversion.
Series series_of_FN(unsigned N, std::size_t T);

struct ReconstructionResult {
  bool ok = false;
  /// First exponent where the series of the decomposition differs from F_N, if any.
  std::optional<std::size_t> witness;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Series comparison (T terms) first, then the exact identity
/// sum_{k,l} g_{kl} prod_j (1 - x^j) / (1 - x^k)^l == 1.
ReconstructionResult check_reconstruction(const QPFDecomposition& d, std::size_t T = 200);
inline bool verify_reconstruction(const QPFDecomposition& d) { return check_reconstruction(d).ok; }

}  // namespace qwave
