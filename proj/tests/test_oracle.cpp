#include <doctest.h>

#include "qwave/oracle.hpp"

using namespace qwave;

namespace {

// Partitions of n with parts <= maxpart, by recursion over the largest part.
long count_partitions(long n, long maxpart) {
  if (n == 0) return 1;
  long total = 0;
  for (long p = std::min(n, maxpart); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

}  // namespace

TEST_CASE("p_dp examples") {
  CHECK(p_dp(2, 4).counts[4] == 3);
  CHECK(p_dp(3, 10).counts[10] == 14);
  for (unsigned N = 1; N <= 10; ++N) CHECK(p_dp(N, 0).counts[0] == 1);
  for (unsigned n = 0; n <= 30; ++n) CHECK(p_dp(1, 30).counts[n] == 1);
  for (unsigned N = 1; N <= 8; ++N)
    for (long n = 0; n <= 25; ++n) CHECK(p_dp(N, 25).counts[n] == count_partitions(n, N));
  // Nondecreasing in N.
  for (unsigned N = 1; N < 10; ++N) {
    const auto a = p_dp(N, 60), b = p_dp(N + 1, 60);
    for (unsigned n = 0; n <= 60; ++n) CHECK(a.counts[n] <= b.counts[n]);
  }
}

TEST_CASE("series_of_FN") {
  CHECK(series_of_FN(1, 6) == Series{1, 1, 1, 1, 1, 1});
  CHECK(series_of_FN(2, 5) == Series{1, 1, 2, 2, 3});
  CHECK(series_of_FN(3, 4) == Series{1, 1, 2, 3});
  CHECK_THROWS(series_of_FN(3, 0));
  for (unsigned N = 1; N <= 15; ++N) {
    const auto s = series_of_FN(N, 500);
    const auto dp = p_dp(N, 499);
    for (std::size_t n = 0; n < 500; ++n) REQUIRE(s[n] == Rational(dp.counts[n]));
  }
}

TEST_CASE("reconstruction check") {
  CHECK(verify_reconstruction(decompose(1)));
  CHECK(verify_reconstruction(decompose(2)));
  CHECK(verify_reconstruction(decompose(8)));

  auto broken = decompose(4);
  broken.set(2, 1, broken.g(2, 1) + Poly::constant(Rational(1, 1000)));
  const auto r = check_reconstruction(broken);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == 0);
}
