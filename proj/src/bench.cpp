#include "qwave/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qwave/grsum.hpp"
#include "qwave/oracle.hpp"
#include "qwave/waves.hpp"

namespace qwave {

namespace {

template <class F>
double median_millis(unsigned runs, F&& body) {
  std::vector<double> times;
  for (unsigned r = 0; r < runs; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

// Keeps results observable so the timed work is not discarded.
volatile std::size_t sink = 0;

}  // namespace

std::vector<BenchRow> run_bench(const std::string& suite, unsigned runs) {
  if (runs == 0) throw std::invalid_argument("bench needs at least one run");
  std::vector<BenchRow> rows;
  if (suite == "sigma") {
    for (unsigned k : {8u, 16u, 32u, 64u, 128u, 256u}) {
      rows.push_back({"sigma-recurrence", k, median_millis(runs, [&] { sink = sink + SigmaTable(k).k(); })});
      rows.push_back({"sigma-sieved", k, median_millis(runs, [&] { sink = sink + sigma_sieved_table(k).size(); })});
    }
  } else if (suite == "decompose") {
    for (unsigned N : {4u, 6u, 8u, 10u, 12u})
      rows.push_back({"decompose", N, median_millis(runs, [&] { sink = sink + decompose(N).terms().size(); })});
  } else if (suite == "partition") {
    constexpr unsigned N = 10;
    const GammaTable table = gamma_table(N);
    for (unsigned long n : {1000ul, 10000ul}) {
      rows.push_back({"wave-sum", n, median_millis(runs, [&] {
                        for (unsigned long m = n - 99; m <= n; ++m) sink = sink + partition_via_waves(m, table).get_ui();
                      })});
      rows.push_back({"dp", n, median_millis(runs, [&] { sink = sink + p_dp(N, n).counts.size(); })});
    }
  } else {
    throw std::invalid_argument("unknown bench suite '" + suite + "' (expected sigma, decompose or partition)");
  }
  return rows;
}

}  // namespace qwave
