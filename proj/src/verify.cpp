#include "qwave/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qwave/degnum.hpp"
#include "qwave/grsum.hpp"
#include "qwave/oracle.hpp"
#include "qwave/waves.hpp"

namespace qwave {

Poly g_top_case_formula(unsigned k, unsigned N) {
  if (k < 2 || k > 3 || N < k) throw std::invalid_argument("case formulas exist for k = 2, 3 and N >= k");
  const unsigned L = N / k;
  Integer den;
  if (k == 2) {
    mpz_ui_pow_ui(den.get_mpz_t(), 2, L + (N % 2 == 0 ? 1 : 2));
    den *= factorial(L);
    return Poly{1, -1} * make_rational(Integer(1), den);
  }
  mpz_ui_pow_ui(den.get_mpz_t(), 3, L + (N % 3 == 2 ? 2 : 1));
  den *= factorial(L);
  const Poly shape = N % 3 == 1 ? Poly{1, 0, -1} : Poly{2, -1, -1};
  return shape * make_rational(Integer(1), den);
}

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const VerifyCell* VerifyReport::first_failure() const {
  for (const auto& c : cells)
    if (!c.pass) return &c;
  return nullptr;
}

std::string VerifyReport::matrix() const {
  std::size_t width = 5;
  for (const auto& name : checks) width = std::max(width, name.size());
  std::ostringstream os;
  os << std::string(width, ' ');
  for (unsigned N = 1; N <= N_max; ++N) os << ' ' << (N % 10);
  os << '\n';
  for (const auto& name : checks) {
    os << name << std::string(width - name.size(), ' ');
    for (unsigned N = 1; N <= N_max; ++N) {
      char mark = '.';
      for (const auto& c : cells)
        if (c.check == name && c.N == N) mark = c.pass ? '+' : 'X';
      os << ' ' << mark;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr unsigned long kWaveSamples = 200;

std::string check_waves(const GammaTable& table) {
  const PartitionTable dp = p_dp(table.N(), kWaveSamples);
  for (unsigned long n = 0; n <= kWaveSamples; ++n) {
    const Integer w = partition_via_waves(n, table);
    if (w != dp.counts[n])
      return "n=" + std::to_string(n) + ": waves " + to_string(w) + ", dp " + to_string(dp.counts[n]);
  }
  return {};
}

std::string check_gamma_top(unsigned N, const GammaTable& table) {
  for (unsigned k = 1; k <= N; ++k) {
    const SigmaTable sigma(k);
    for (unsigned j = 0; j < k; ++j) {
      const Rational fast = gamma_top_fast(j, N, sigma);
      const Rational full = table.at(j, k, N / k);
      if (fast != full)
        return "j=" + std::to_string(j) + " k=" + std::to_string(k) + ": " + to_string(fast) + " vs " + to_string(full);
    }
  }
  return {};
}

std::string check_w1(unsigned N, const GammaTable& table) {
  const auto w1 = w1_coeffs(N);
  for (unsigned l = 1; l <= N; ++l)
    if (w1[l - 1] != table.at(0, 1, l))
      return "l=" + std::to_string(l) + ": " + to_string(w1[l - 1]) + " vs " + to_string(table.at(0, 1, l));
  return {};
}

std::string check_w2(unsigned N, const GammaTable& table) {
  const auto w2 = w2_coeffs(N);
  const VariantK2Table variant = decompose_variant_k2(N);
  for (unsigned l = 1; l <= N / 2; ++l)
    if (w2[l - 1] != variant.at(l))
      return "l=" + std::to_string(l) + ": " + to_string(w2[l - 1]) + " vs " + to_string(variant.at(l));
  for (unsigned long n = 0; n <= 50; ++n) {
    const Rational a = w2_closed_eval(n, N, variant);
    const Rational b = wave_eval(2, n, N, table);
    if (a != b) return "W2(" + std::to_string(n) + "): " + to_string(a) + " vs " + to_string(b);
  }
  return {};
}

std::string check_case_tables(unsigned N, const GammaTable& table) {
  for (unsigned k = 2; k <= 3 && k <= N; ++k) {
    std::vector<Rational> coeffs;
    for (unsigned h = 0; h < k; ++h) coeffs.push_back(table.at(h, k, N / k));
    const Poly computed(std::move(coeffs));
    const Poly expected = g_top_case_formula(k, N);
    if (computed != expected) return "k=" + std::to_string(k) + ": " + to_string(computed) + " vs " + to_string(expected);
  }
  return {};
}

std::string check_sigma(unsigned k) {
  const SigmaTable table(k);
  const auto sieved = sigma_sieved_table(k);
  for (unsigned t = 0; t < k; ++t)
    for (unsigned j = 0; j < k; ++j)
      if (table.at(t, j) != sieved[t][j])
        return "t=" + std::to_string(t) + " j=" + std::to_string(j) + ": " + to_string(table.at(t, j)) + " vs " +
               to_string(sieved[t][j]);
  for (const auto& b : sigma_bounds_check(k))
    if (!b.pass) return b.name + ": worst " + to_string(b.worst);
  return {};
}

}  // namespace

VerifyReport run_verify(unsigned N_max, const std::function<void(const VerifyCell&)>& progress) {
  if (N_max == 0) throw std::invalid_argument("verify requires N_max >= 1");
  VerifyReport report;
  report.N_max = N_max;
  report.checks = {"reconstruction", "wave-sum=dp", "gamma-top", "w1-closed", "w2-closed",
                   "w1-recurrence",  "w2-recurrence", "case-tables", "sigma(k)"};

  auto record = [&](const std::string& check, unsigned N, std::string witness) {
    VerifyCell cell{check, N, witness.empty(), std::move(witness)};
    if (progress) progress(cell);
    report.cells.push_back(std::move(cell));
  };
  auto guarded = [&](const std::string& check, unsigned N, auto&& body) {
    try {
      record(check, N, body());
    } catch (const std::exception& e) {
      record(check, N, std::string("exception: ") + e.what());
    }
  };

  for (unsigned N = 1; N <= N_max; ++N) {
    const QPFDecomposition d = decompose(N);
    const GammaTable table(d);
    guarded("reconstruction", N, [&] {
      const auto r = check_reconstruction(d);
      return r.ok ? std::string() : r.message;
    });
    guarded("wave-sum=dp", N, [&] { return check_waves(table); });
    guarded("gamma-top", N, [&] { return check_gamma_top(N, table); });
    guarded("w1-closed", N, [&] { return check_w1(N, table); });
    if (N >= 2) guarded("w2-closed", N, [&] { return check_w2(N, table); });
    guarded("w1-recurrence", N, [&] { return w1_recurrence_check(N) ? std::string() : std::string("mismatch"); });
    if (N >= 2)
      guarded("w2-recurrence", N, [&] { return w2_recurrence_check(N) ? std::string() : std::string("mismatch"); });
    if (N >= 2) guarded("case-tables", N, [&] { return check_case_tables(N, table); });
    guarded("sigma(k)", N, [&] { return check_sigma(N); });
  }
  return report;
}

}  // namespace qwave
