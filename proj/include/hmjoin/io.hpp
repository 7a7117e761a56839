#pragma once

#include <json.hpp>

#include <string>
#include <variant>

#include "hmjoin/cospectral.hpp"
#include "hmjoin/families.hpp"
#include "hmjoin/graph.hpp"
#include "hmjoin/join.hpp"
#include "hmjoin/spectra.hpp"

namespace hmjoin {

using Json = nlohmann::json;

// Parses text, turning syntax errors into SpecError carrying the line and column.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

// Graph object: {"n": 3, "edges": [[0, 1], [1, 2]]} with optional "labels"; or
// a named graph {"family": "star", "params": [3]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& pointer = "");

// {"host": graph, "m": int, "factors": [graph...], "indexing": [[label...]...]}
// with labels in 1..m. Specs with unlabelled vertices (label 0) carry
// "partial": true and are only accepted with it.
Json join_spec_to_json(const JoinSpec& spec);
JoinSpec join_spec_from_json(const Json& j);

// As above with "subsets" (0-based vertex lists) and "params" instead of "m"
// and "indexing". "params" is a preset name or {"alpha", "beta", "gamma",
// "delta"} with fraction strings.
Json generalized_spec_to_json(const GeneralizedJoinSpec& spec);
GeneralizedJoinSpec generalized_spec_from_json(const Json& j);

using AnySpec = std::variant<JoinSpec, GeneralizedJoinSpec>;
// Dispatches on the presence of "subsets".
AnySpec parse_spec(const Json& j);

Json params_to_json(const UniversalParams& p);
UniversalParams params_from_json(const Json& j, const std::string& pointer = "/params");

// Coefficients lowest degree first as "p/q" strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const std::string& pointer = "");

Json rational_function_to_json(const RationalFunction& f);
Json main_function_to_json(const MainFunction& mf);
Json eigen_class_to_json(const EigenClass& c);
Json report_to_json(const SpectralReport& r);
Json generalized_factorization_to_json(const GeneralizedFactorization& f);
Json reduction_to_json(const ReductionReport& r, ReductionMode mode);
Json realization_to_json(const FamilyRealization& r);
Json certificate_to_json(const CospectralCertificate& c);

// Stable pretty form used for every document the tools write.
std::string dump(const Json& j);

}  // namespace hmjoin
