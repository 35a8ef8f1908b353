// qwave: exact q-partial fractions, Sylvester waves and Gaussian-Ramanujan sums.
//
// Exit codes: 0 ok, 1 mathematical inconsistency, 2 usage or precondition error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include "qwave/bench.hpp"
#include "qwave/oracle.hpp"
#include "qwave/output.hpp"
#include "qwave/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  unsigned max_N = 30;
  bool force = false;
};

// Thrown for mathematical inconsistencies the tool detected itself.
struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void guard_N(const Options& opt, unsigned N, const char* what) {
  if (N > opt.max_N && !opt.force)
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(N) + " exceeds --max-N " +
                                std::to_string(opt.max_N) + " (pass --force to run anyway)");
}

void emit(const Options& opt, const qwave::Json& doc) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << qwave::render_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact q-partial fractions of 1/prod(1-x^k) and Sylvester waves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-N", opt.max_N, "Largest N accepted without --force");
  app.add_flag("--force", opt.force, "Allow N above --max-N (may be slow)");

  unsigned N = 0, k = 0, j = 0, h = 0, m = 0, n_max = 0;
  unsigned long n = 0;
  std::size_t order = 0;
  int center = 1;
  std::string kind, suite;

  auto* decompose = app.add_subcommand("decompose", "Full decomposition: g_{kl} and Gamma tables");
  decompose->add_option("N", N)->required();

  auto* sigma = app.add_subcommand("sigma", "Gaussian-Ramanujan sum table sigma_k(t;j)");
  sigma->add_option("k", k)->required()->check(CLI::PositiveNumber);

  auto* gamma = app.add_subcommand("gamma", "Gamma_{j,k,floor(N/k)}(N) by the fast formula");
  gamma->add_option("j", j)->required();
  gamma->add_option("k", k)->required();
  gamma->add_option("N", N)->required();

  auto* wave = app.add_subcommand("wave", "Sylvester wave W_k(n;N)");
  wave->add_option("k", k)->required();
  wave->add_option("n", n)->required();
  wave->add_option("N", N)->required();

  auto* partition = app.add_subcommand("partition", "p_N(n) as a sum of waves");
  partition->add_option("n", n)->required();
  partition->add_option("--max-part", N, "Largest part N")->required();

  auto* degnum = app.add_subcommand("degnum", "Raw degenerate Bernoulli/Euler series coefficients");
  degnum->add_option("kind", kind)->required()->check(CLI::IsMember({"bernoulli", "euler"}));
  degnum->add_option("m", m)->required();
  degnum->add_option("order", order)->required();
  degnum->add_option("--center", center, "Expansion point, 1 or -1")->check(CLI::IsMember({1, -1}));

  auto* rademacher = app.add_subcommand("rademacher", "Top coefficient C_{h,k,floor(N/k)}(N)");
  rademacher->set_help_flag("--help", "Print this help message and exit");
  rademacher->add_option("h", h)->required();
  rademacher->add_option("k", k)->required();
  rademacher->add_option("N", N)->required();

  auto* verify = app.add_subcommand("verify", "Cross-validation matrix for N = 1..N_max");
  verify->add_option("N_max", n_max)->required();

  auto* bench = app.add_subcommand("bench", "Timing suites (median of 5 runs)");
  bench->add_option("suite", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decompose) {
      guard_N(opt, N, "N");
      const auto doc = qwave::decompose_document(N);
      emit(opt, doc);
      return doc["results"]["reconstruction"].get<bool>() ? kOk : kInconsistent;
    }
    if (*sigma) {
      guard_N(opt, k, "k");
      emit(opt, qwave::sigma_document(k));
      return kOk;
    }
    if (*gamma) {
      guard_N(opt, N, "N");
      emit(opt, qwave::gamma_document(j, k, N));
      return kOk;
    }
    if (*wave) {
      guard_N(opt, N, "N");
      emit(opt, qwave::wave_document(k, n, N));
      return kOk;
    }
    if (*partition) {
      guard_N(opt, N, "max-part");
      const auto doc = qwave::partition_document(n, N);
      const qwave::Integer dp = qwave::p_dp(N, n).counts[n];
      if (doc["results"]["value"] != qwave::to_json(dp))
        throw Inconsistency("wave sum disagrees with direct count " + qwave::to_string(dp));
      emit(opt, doc);
      return kOk;
    }
    if (*degnum) {
      emit(opt, qwave::degnum_document(qwave::parse_deg_kind(kind), m, order, center));
      return kOk;
    }
    if (*rademacher) {
      guard_N(opt, N, "N");
      emit(opt, qwave::rademacher_document(h, k, N));
      return kOk;
    }
    if (*verify) {
      guard_N(opt, n_max, "N_max");
      const bool text = opt.format == "text";
      const auto report = qwave::run_verify(n_max, [&](const qwave::VerifyCell& c) {
        if (text && !c.pass) std::fprintf(stderr, "FAIL %s N=%u: %s\n", c.check.c_str(), c.N, c.witness.c_str());
      });
      if (text) {
        std::cout << report.matrix();
      } else {
        qwave::Json cells = qwave::Json::array();
        for (const auto& c : report.cells)
          cells.push_back({{"check", c.check}, {"N", c.N}, {"pass", c.pass}, {"witness", c.witness}});
        emit(opt, qwave::make_document("verify", {{"N_max", n_max}}, {{"ok", report.ok()}, {"cells", cells}}));
      }
      if (const auto* fail = report.first_failure()) {
        std::cerr << "first failure: " << fail->check << " N=" << fail->N << ": " << fail->witness << '\n';
        return kInconsistent;
      }
      return kOk;
    }
    if (*bench) {
      const auto rows = qwave::run_bench(suite);
      qwave::Json arr = qwave::Json::array();
      for (const auto& r : rows) arr.push_back({{"method", r.method}, {"size", r.size}, {"millis", r.millis}});
      std::cout << qwave::make_document("bench", {{"suite", suite}}, {{"rows", arr}}).dump(2) << '\n';
      return kOk;
    }
  } catch (const Inconsistency& e) {
    std::cerr << "qwave: inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qwave: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "qwave: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qwave: inconsistency: " << e.what() << '\n';
    return kInconsistent;
  }
  return kUsage;
}
