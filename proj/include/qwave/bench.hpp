#pragma once

#include <string>
#include <vector>

namespace qwave {

struct BenchRow {
  std::string method;
  unsigned long size = 0;
  double millis = 0;  // median wall-clock
};

/// suite: "sigma", "decompose" or "partition". Throws std::invalid_argument otherwise.
std::vector<BenchRow> run_bench(const std::string& suite, unsigned runs = 5);

}  // namespace qwave
