#pragma once

#include <string>

#include <json.hpp>

#include "qwave/degnum.hpp"
#include "qwave/grsum.hpp"
#include "qwave/qpartial.hpp"

namespace qwave {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Integers that fit in a long become JSON numbers, larger ones decimal strings.
Json to_json(const Integer& z);
Json to_json(const Poly& p);
Json to_json(const CycloFieldElement& e);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);

/// {"command", "params", "results", "exact": true}
Json make_document(const std::string& command, Json params, Json results);

/// {"g": {"k,l": poly}, "gamma": {"h,k,l": rational}}
Json decomposition_to_json(const QPFDecomposition& d);
/// Reads the "g" object back; N is taken as the largest k present.
QPFDecomposition decomposition_from_json(const Json& results);

Json sigma_to_json(const SigmaTable& table);

// Command payloads; each returns a full document.
Json decompose_document(unsigned N);
Json sigma_document(unsigned k);
Json gamma_document(unsigned j, unsigned k, unsigned N);
Json wave_document(unsigned k, unsigned long n, unsigned N);
Json partition_document(unsigned long n, unsigned N);
Json degnum_document(DegKind kind, unsigned m, std::size_t order, int center);
Json rademacher_document(unsigned h, unsigned k, unsigned N);

/// Line-oriented rendering of a document. A results object holding only "value"
/// prints just that value.
std::string render_text(const Json& document);

}  // namespace qwave
