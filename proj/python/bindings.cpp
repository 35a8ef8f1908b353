// Rationals cross the boundary as "p/q" strings and integers as decimal strings;
// qwave/__init__.py turns them into Fraction / int.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwave/cyclotomic.hpp"
#include "qwave/degnum.hpp"
#include "qwave/grsum.hpp"
#include "qwave/oracle.hpp"
#include "qwave/output.hpp"
#include "qwave/qpartial.hpp"
#include "qwave/verify.hpp"
#include "qwave/waves.hpp"

namespace py = pybind11;
using namespace qwave;

namespace {

std::vector<std::string> strings(const Poly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

void check_N(unsigned N, unsigned max_N) {
  if (N > max_N) throw py::value_error("N = " + std::to_string(N) + " exceeds max_N = " + std::to_string(max_N));
}

}  // namespace

PYBIND11_MODULE(_qwave, m) {
  m.doc() = "exact q-partial fraction and wave tools";

  m.def("cyclotomic", [](unsigned n) {
    if (n == 0) throw py::value_error("n must be >= 1");
    return strings(cyclotomic(n));
  }, py::arg("n"));

  m.def("decompose", [](unsigned N, unsigned max_N) {
    check_N(N, max_N);
    std::map<std::pair<unsigned, unsigned>, std::vector<std::string>> out;
    const QPFDecomposition d = decompose(N);
    for (const auto& [key, poly] : d.terms()) out[key] = strings(poly);
    return out;
  }, py::arg("N"), py::arg("max_N") = 30);

  m.def("gamma_table", [](unsigned N, unsigned max_N) {
    check_N(N, max_N);
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::string> out;
    const GammaTable table = gamma_table(N);
    for (const auto& [key, value] : table.entries()) out[key] = to_string(value);
    return out;
  }, py::arg("N"), py::arg("max_N") = 30);

  m.def("gamma_top", [](unsigned j, unsigned k, unsigned N) {
    if (k == 0 || k > N || j >= k) throw py::value_error("requires 0 <= j < k <= N");
    return to_string(gamma_top_fast(j, k, N));
  }, py::arg("j"), py::arg("k"), py::arg("N"));

  m.def("sigma_table", [](unsigned k) {
    if (k == 0) throw py::value_error("k must be >= 1");
    const SigmaTable table(k);
    std::vector<std::vector<std::string>> rows(k);
    for (unsigned t = 0; t < k; ++t)
      for (unsigned j = 0; j < k; ++j) rows[t].push_back(table.at(t, j).get_str());
    return rows;
  }, py::arg("k"));

  m.def("wave", [](unsigned k, unsigned long n, unsigned N) {
    if (k == 0 || k > N) throw py::value_error("requires 1 <= k <= N");
    return to_string(wave_eval(k, n, N, gamma_table(N)));
  }, py::arg("k"), py::arg("n"), py::arg("N"));

  m.def("partition", [](unsigned long n, unsigned N) {
    if (N == 0) throw py::value_error("N must be >= 1");
    return partition_via_waves(n, N).get_str();
  }, py::arg("n"), py::arg("N"));

  m.def("partition_dp", [](unsigned N, unsigned long n_max) {
    std::vector<std::string> out;
    for (const auto& c : p_dp(N, n_max).counts) out.push_back(c.get_str());
    return out;
  }, py::arg("N"), py::arg("n_max"));

  m.def("degnum", [](const std::string& kind, unsigned m_, std::size_t order, int center) {
    try {
      return strings(deg_series(parse_deg_kind(kind), center, m_, order).coeffs);
    } catch (const std::invalid_argument& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("kind"), py::arg("m"), py::arg("order"), py::arg("center") = 1);

  m.def("w1_coeffs", [](unsigned N) { return strings(w1_coeffs(N)); }, py::arg("N"));
  m.def("w2_coeffs", [](unsigned N) { return strings(w2_coeffs(N)); }, py::arg("N"));

  m.def("rademacher", [](unsigned h, unsigned k, unsigned N) {
    try {
      const RademacherTop top = rademacher_top(h, k, N);
      py::dict out;
      out["coords"] = strings(top.value.coords());
      out["expression"] = to_string(top.value);
      out["re"] = top.real_approx;
      out["im"] = top.imag_approx;
      return out;
    } catch (const std::invalid_argument& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("h"), py::arg("k"), py::arg("N"));

  m.def("verify", [](unsigned N_max) {
    const VerifyReport r = run_verify(N_max);
    py::dict out;
    out["ok"] = r.ok();
    out["matrix"] = r.matrix();
    if (const VerifyCell* f = r.first_failure()) out["first_failure"] = f->check + " N=" + std::to_string(f->N) + ": " + f->witness;
    return out;
  }, py::arg("N_max"));

  m.def("decompose_json", [](unsigned N, unsigned max_N) {
    check_N(N, max_N);
    return decompose_document(N).dump();
  }, py::arg("N"), py::arg("max_N") = 30);
}
