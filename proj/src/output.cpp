#include "qwave/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qwave/oracle.hpp"
#include "qwave/waves.hpp"

namespace qwave {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const CycloFieldElement& e) {
  Json arr = Json::array();
  for (const auto& c : e.coords()) arr.push_back(to_string(c));
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

Json make_document(const std::string& command, Json params, Json results) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  doc["exact"] = true;
  return doc;
}

Json decomposition_to_json(const QPFDecomposition& d) {
  Json g = Json::object();
  for (const auto& [key, poly] : d.terms())
    g[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(poly);
  Json gamma = Json::object();
  const GammaTable table(d);
  for (const auto& [key, value] : table.entries()) {
    const auto [h, k, l] = key;
    gamma[std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(l)] = to_json(value);
  }
  Json out;
  out["g"] = std::move(g);
  out["gamma"] = std::move(gamma);
  return out;
}

QPFDecomposition decomposition_from_json(const Json& results) {
  const Json& g = results.at("g");
  unsigned N = 0;
  std::vector<std::tuple<unsigned, unsigned, Poly>> parsed;
  for (const auto& [key, value] : g.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad g key '" + key + "'");
    const unsigned k = static_cast<unsigned>(std::stoul(key.substr(0, comma)));
    const unsigned l = static_cast<unsigned>(std::stoul(key.substr(comma + 1)));
    N = std::max(N, k);
    parsed.emplace_back(k, l, poly_from_json(value));
  }
  QPFDecomposition d(N);
  for (auto& [k, l, p] : parsed) d.set(k, l, std::move(p));
  return d;
}

Json sigma_to_json(const SigmaTable& table) {
  Json rows = Json::array();
  for (unsigned t = 0; t < table.k(); ++t) {
    Json row = Json::array();
    for (unsigned j = 0; j < table.k(); ++j) row.push_back(to_json(table.at(t, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json decompose_document(unsigned N) {
  const QPFDecomposition d = decompose(N);
  Json results = decomposition_to_json(d);
  const auto check = check_reconstruction(d);
  results["reconstruction"] = check.ok;
  if (!check.ok) results["reconstruction_error"] = check.message;
  return make_document("decompose", Json{{"N", N}}, std::move(results));
}

Json sigma_document(unsigned k) {
  return make_document("sigma", Json{{"k", k}}, Json{{"value", sigma_to_json(SigmaTable(k))}});
}

Json gamma_document(unsigned j, unsigned k, unsigned N) {
  return make_document("gamma", Json{{"j", j}, {"k", k}, {"N", N}}, Json{{"value", to_json(gamma_top_fast(j, k, N))}});
}

Json wave_document(unsigned k, unsigned long n, unsigned N) {
  if (k == 0 || k > N) throw std::invalid_argument("wave requires 1 <= k <= N");
  return make_document("wave", Json{{"k", k}, {"n", n}, {"N", N}},
                       Json{{"value", to_json(wave_eval(k, n, N, gamma_table(N)))}});
}

Json partition_document(unsigned long n, unsigned N) {
  return make_document("partition", Json{{"n", n}, {"max_part", N}},
                       Json{{"value", to_json(partition_via_waves(n, N))}});
}

Json degnum_document(DegKind kind, unsigned m, std::size_t order, int center) {
  const DegSeries s = deg_series(kind, center, m, order);
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_json(c));
  return make_document("degnum",
                       Json{{"kind", std::string(to_string(kind))}, {"m", m}, {"order", order}, {"center", center}},
                       Json{{"value", std::move(coeffs)}});
}

Json rademacher_document(unsigned h, unsigned k, unsigned N) {
  const RademacherTop top = rademacher_top(h, k, N);
  Json results;
  results["L"] = N / k;
  results["coords"] = to_json(top.value);
  results["expression"] = to_string(top.value);
  results["approx"] = Json{{"re", top.real_approx}, {"im", top.imag_approx}};
  return make_document("rademacher", Json{{"h", h}, {"k", k}, {"N", N}}, std::move(results));
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

std::string flat_array_text(const Json& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : v) {
    if (!first) out += ", ";
    out += scalar_text(e);
    first = false;
  }
  return out + "]";
}

void render_value(std::ostream& os, const std::string& path, const Json& v) {
  const std::string prefix = path.empty() ? "" : path + " = ";
  if (!v.is_structured()) {
    os << prefix << scalar_text(v) << '\n';
  } else if (is_flat_array(v)) {
    os << prefix << flat_array_text(v) << '\n';
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) render_value(os, path + "[" + std::to_string(i) + "]", v[i]);
  } else {
    for (const auto& [key, child] : v.items()) {
      const bool indexed = !path.empty() || key.find(',') != std::string::npos;
      render_value(os, path.empty() ? key : (indexed ? path + "[" + key + "]" : path + "." + key), child);
    }
  }
}

}  // namespace

std::string render_text(const Json& document) {
  std::ostringstream os;
  const Json& results = document.at("results");
  if (results.is_object() && results.size() == 1 && results.contains("value")) {
    const Json& v = results["value"];
    if (v.is_array() && !is_flat_array(v)) {
      for (const auto& row : v) os << (row.is_structured() ? flat_array_text(row) : scalar_text(row)) << '\n';
    } else {
      render_value(os, "", v);
    }
    return os.str();
  }
  os << "# " << document.at("command").get<std::string>() << '\n';
  for (const auto& [key, value] : document.at("params").items()) os << key << " = " << scalar_text(value) << '\n';
  render_value(os, "", results);
  return os.str();
}

}  // namespace qwave
