#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qwave/poly.hpp"

namespace qwave {

/// Case formulas for g_{k,floor(N/k)}^{(N)}, k = 2 or 3.
Poly g_top_case_formula(unsigned k, unsigned N);

struct VerifyCell {
  std::string check;
  unsigned N = 0;  // or k for the sigma rows
  bool pass = false;
  std::string witness;  // first failure, empty on pass
};

struct VerifyReport {
  unsigned N_max = 0;
  std::vector<std::string> checks;  // row order
  std::vector<VerifyCell> cells;

  bool ok() const;
  const VerifyCell* first_failure() const;
  /// One row per check, one column per N, '+' pass, 'X' fail, '.' not applicable.
  std::string matrix() const;
};

/// Reconstruction, wave sum vs DP, fast top formula vs decomposition, closed forms
/// vs decomposition, recurrences, case tables and sigma recurrence vs sieved sums,
/// for every N (and k) in 1..N_max.
VerifyReport run_verify(unsigned N_max, const std::function<void(const VerifyCell&)>& progress = {});

}  // namespace qwave
