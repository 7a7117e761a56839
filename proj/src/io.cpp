#include "hmjoin/io.hpp"

#include <set>

#include "hmjoin/errors.hpp"

namespace hmjoin {

namespace {

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& field(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) throw SpecError(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(at(pointer, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SpecError(pointer, "expected an array");
  return j;
}

int integer(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SpecError(pointer, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw SpecError(pointer, "integer out of range");
  return static_cast<int>(v);
}

Rational rational(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(integer(j, pointer));
  if (!j.is_string()) throw SpecError(pointer, "expected a fraction string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw SpecError(pointer, e.what());
  }
}

std::vector<int> int_list(const Json& j, const std::string& pointer) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, pointer).size(); ++i) out.push_back(integer(j[i], at(pointer, i)));
  return out;
}

std::vector<Graph> factor_list(const Json& j, const std::string& pointer) {
  std::vector<Graph> out;
  if (array(j, pointer).empty()) throw SpecError(pointer, "at least one factor is required");
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(graph_from_json(j[i], at(pointer, i)));
  return out;
}

Graph host_from_json(const Json& doc, std::size_t factors) {
  Graph host = graph_from_json(field(doc, "host", ""), "/host");
  if (static_cast<std::size_t>(host.order()) != factors)
    throw SpecError("/host", "host has " + std::to_string(host.order()) + " vertices but there are " +
                                 std::to_string(factors) + " factors");
  return host;
}

Json rational_json(const Rational& r) { return to_fraction_string(r); }

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') ++line, column = 1;
      else ++column;
    }
    throw SpecError(source + ":" + std::to_string(line) + ":" + std::to_string(column), "malformed JSON");
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json j = {{"n", g.order()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw SpecError(pointer.empty() ? "/" : pointer, "expected a graph object");
  if (j.contains("family")) {
    const auto& name = field(j, "family", pointer);
    if (!name.is_string()) throw SpecError(at(pointer, "family"), "expected a family name");
    const auto params = int_list(field(j, "params", pointer), at(pointer, "params"));
    try {
      return make_named(name.get<std::string>(), params);
    } catch (const InvalidParameters& e) {
      throw SpecError(at(pointer, "params"), e.what());
    }
  }
  const int n = integer(field(j, "n", pointer), at(pointer, "n"));
  if (n < 0) throw SpecError(at(pointer, "n"), "vertex count must be non-negative");
  const auto eptr = at(pointer, "edges");
  const auto& edges = array(field(j, "edges", pointer), eptr);
  std::vector<Edge> list;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto ep = at(eptr, e);
    const auto uv = int_list(edges[e], ep);
    if (uv.size() != 2) throw SpecError(ep, "an edge is a pair [u, v]");
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) throw SpecError(ep, "endpoint outside [0, n)");
    if (uv[0] == uv[1]) throw SpecError(ep, "loops are not allowed");
    list.emplace_back(uv[0], uv[1]);
  }
  Graph g(n, list);
  if (j.contains("labels")) {
    const auto lptr = at(pointer, "labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < array(j["labels"], lptr).size(); ++i) {
      if (!j["labels"][i].is_string()) throw SpecError(at(lptr, i), "expected a string");
      labels.push_back(j["labels"][i].get<std::string>());
    }
    if (labels.size() != static_cast<std::size_t>(n)) throw SpecError(lptr, "one label per vertex");
    g.set_labels(std::move(labels));
  }
  return g;
}

Json join_spec_to_json(const JoinSpec& spec) {
  Json factors = Json::array(), indexing = Json::array();
  bool partial = false;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    factors.push_back(graph_to_json(spec.factors[i]));
    indexing.push_back(spec.indexing[i].labels);
    partial = partial || !spec.indexing[i].is_total();
  }
  Json j = {{"host", graph_to_json(spec.host)}, {"m", spec.m}, {"factors", factors}, {"indexing", indexing}};
  if (partial) j["partial"] = true;
  return j;
}

JoinSpec join_spec_from_json(const Json& j) {
  JoinSpec spec;
  bool partial = false;
  if (j.is_object() && j.contains("partial")) {
    if (!j["partial"].is_boolean()) throw SpecError("/partial", "expected a boolean");
    partial = j["partial"].get<bool>();
  }
  spec.factors = factor_list(field(j, "factors", ""), "/factors");
  spec.host = host_from_json(j, spec.factors.size());
  spec.m = integer(field(j, "m", ""), "/m");
  if (spec.m < 1) throw SpecError("/m", "m must be at least 1");
  const auto& idx = array(field(j, "indexing", ""), "/indexing");
  if (idx.size() != spec.factors.size()) throw SpecError("/indexing", "need one label list per factor");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto ptr = at("/indexing", i);
    IndexingMap im{spec.m, int_list(idx[i], ptr)};
    if (im.labels.size() != static_cast<std::size_t>(spec.factors[i].order()))
      throw SpecError(ptr, "factor has " + std::to_string(spec.factors[i].order()) + " vertices but " +
                               std::to_string(im.labels.size()) + " labels");
    for (std::size_t v = 0; v < im.labels.size(); ++v) {
      const int l = im.labels[v];
      if (l == IndexingMap::kNoLabel && partial) continue;
      if (l < 1 || l > spec.m)
        throw SpecError(at(ptr, v), "label " + std::to_string(l) + " outside [1, " + std::to_string(spec.m) + "]");
    }
    spec.indexing.push_back(std::move(im));
  }
  try {
    spec.validate(partial);
  } catch (const Error& e) {
    throw SpecError("/", e.what());
  }
  return spec;
}

Json params_to_json(const UniversalParams& p) {
  return {{"alpha", rational_json(p.alpha)},
          {"beta", rational_json(p.beta)},
          {"gamma", rational_json(p.gamma)},
          {"delta", rational_json(p.delta)}};
}

UniversalParams params_from_json(const Json& j, const std::string& pointer) {
  UniversalParams p;
  if (j.is_string()) {
    try {
      return preset_from_name(j.get<std::string>());
    } catch (const Error& e) {
      throw SpecError(pointer, e.what());
    }
  }
  if (!j.is_object()) throw SpecError(pointer, "expected a preset name or an object of fractions");
  p.alpha = rational(field(j, "alpha", pointer), at(pointer, "alpha"));
  p.beta = j.contains("beta") ? rational(j["beta"], at(pointer, "beta")) : Rational(0);
  p.gamma = j.contains("gamma") ? rational(j["gamma"], at(pointer, "gamma")) : Rational(0);
  p.delta = j.contains("delta") ? rational(j["delta"], at(pointer, "delta")) : Rational(0);
  if (p.alpha == 0) throw SpecError(at(pointer, "alpha"), "alpha must be nonzero");
  return p;
}

Json generalized_spec_to_json(const GeneralizedJoinSpec& spec) {
  Json factors = Json::array();
  for (const auto& g : spec.factors) factors.push_back(graph_to_json(g));
  return {{"host", graph_to_json(spec.host)},
          {"factors", factors},
          {"subsets", spec.subsets},
          {"params", params_to_json(spec.params)}};
}

GeneralizedJoinSpec generalized_spec_from_json(const Json& j) {
  GeneralizedJoinSpec spec;
  spec.factors = factor_list(field(j, "factors", ""), "/factors");
  spec.host = host_from_json(j, spec.factors.size());
  const auto& subsets = array(field(j, "subsets", ""), "/subsets");
  if (subsets.size() != spec.factors.size()) throw SpecError("/subsets", "need one subset per factor");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto ptr = at("/subsets", i);
    auto s = int_list(subsets[i], ptr);
    std::set<int> seen;
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] < 0 || s[t] >= spec.factors[i].order()) throw SpecError(at(ptr, t), "vertex outside the factor");
      if (!seen.insert(s[t]).second) throw SpecError(at(ptr, t), "vertex listed twice");
    }
    spec.subsets.push_back(std::move(s));
  }
  spec.params = j.contains("params") ? params_from_json(j["params"]) : UniversalParams::adjacency();
  try {
    spec.validate();
  } catch (const Error& e) {
    throw SpecError("/", e.what());
  }
  return spec;
}

AnySpec parse_spec(const Json& j) {
  if (j.is_object() && j.contains("subsets")) return generalized_spec_from_json(j);
  return join_spec_from_json(j);
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& pointer) {
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < array(j, pointer).size(); ++i) coeffs.push_back(rational(j[i], at(pointer, i)));
  return Polynomial(std::move(coeffs));
}

Json rational_function_to_json(const RationalFunction& f) {
  return {{"numerator", polynomial_to_json(f.numerator())},
          {"denominator", polynomial_to_json(f.denominator())},
          {"text", to_string(f)}};
}

Json main_function_to_json(const MainFunction& mf) {
  Json entries = Json::array(), numerators = Json::array();
  for (std::size_t r = 0; r < mf.matrix.rows(); ++r) {
    Json row = Json::array(), nrow = Json::array();
    for (std::size_t c = 0; c < mf.matrix.cols(); ++c) {
      row.push_back(rational_function_to_json(mf.matrix(r, c)));
      nrow.push_back(polynomial_to_json(mf.numerator(r, c)));
    }
    entries.push_back(std::move(row));
    numerators.push_back(std::move(nrow));
  }
  return {{"g", polynomial_to_json(mf.denominator)}, {"f", numerators}, {"entries", entries}};
}

Json eigen_class_to_json(const EigenClass& c) {
  return {{"class_poly", polynomial_to_json(c.defining)},
          {"text", to_string(c.defining)},
          {"value", c.value ? Json(to_fraction_string(*c.value)) : Json(nullptr)},
          {"multiplicity", c.multiplicity},
          {"flag", c.e_main ? "main" : "non-main"}};
}

Json report_to_json(const SpectralReport& r) {
  Json factors = Json::array(), mains = Json::array(), flags = Json::array(), ledger = Json::array(),
       combined = Json::array(), numeric = Json::array();
  for (std::size_t i = 0; i < r.factor_charpolys.size(); ++i) {
    factors.push_back({{"charpoly", polynomial_to_json(r.factor_charpolys[i])},
                       {"text", to_factored_string(r.factor_charpolys[i])},
                       {"matrix", matrix_json(r.factor_matrices[i])}});
    mains.push_back(main_function_to_json(r.main_functions[i]));
    Json row = Json::array();
    for (const auto& c : r.e_main_flags[i]) row.push_back(eigen_class_to_json(c));
    flags.push_back(std::move(row));
  }
  for (const auto& row : r.carry_forward)
    ledger.push_back({{"factor", row.factor},
                      {"class", polynomial_to_json(row.eigen_class.defining)},
                      {"text", to_string(row.eigen_class.defining)},
                      {"flag", row.eigen_class.e_main ? "main" : "non-main"},
                      {"bound", row.guaranteed},
                      {"observed", row.observed},
                      {"observed_numeric", row.observed_numeric}});
  for (const auto& row : r.combined)
    combined.push_back({{"value", to_fraction_string(row.value)}, {"bound", row.guaranteed}, {"observed", row.observed}});
  for (const auto& e : r.numeric_spectrum) numeric.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return {{"params", params_to_json(r.params)},
          {"m", r.m},
          {"charpoly_direct", polynomial_to_json(r.charpoly_direct)},
          {"charpoly_block", polynomial_to_json(r.charpoly_block)},
          {"charpoly_text", to_string(r.charpoly_direct)},
          {"charpoly_factored", to_factored_string(r.charpoly_direct)},
          {"identity_holds", r.charpoly_direct == r.charpoly_block},
          {"factors", factors},
          {"main_functions", mains},
          {"phi", polynomial_to_json(r.phi_polynomial)},
          {"phi_degree_bound", r.phi_degree_bound()},
          {"e_main_flags", flags},
          {"ledger", ledger},
          {"combined", combined},
          {"numeric_spectrum", numeric}};
}

Json generalized_factorization_to_json(const GeneralizedFactorization& f) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < f.factor_matrices.size(); ++i)
    factors.push_back({{"matrix", matrix_json(f.factor_matrices[i])},
                       {"charpoly", polynomial_to_json(f.factor_charpolys[i])},
                       {"main_function", main_function_to_json(f.main_functions[i])}});
  return {{"working_spec", generalized_spec_to_json(f.working)},
          {"factors", factors},
          {"phi", polynomial_to_json(f.phi)},
          {"charpoly", polynomial_to_json(f.charpoly)},
          {"charpoly_factored", to_factored_string(f.charpoly)}};
}

Json reduction_to_json(const ReductionReport& r, ReductionMode mode) {
  return {{"mode", reduction_mode_name(mode)},
          {"original_m", r.original_m},
          {"deleted_labels", r.deleted_labels},
          {"deleted_count", r.deleted_count()},
          {"remaining_count", r.remaining_count()},
          {"reduced", join_spec_to_json(r.reduced)}};
}

Json realization_to_json(const FamilyRealization& r) {
  return {{"graph", graph_to_json(r.direct)}, {"spec", join_spec_to_json(r.spec)}, {"alignment", r.alignment}};
}

Json certificate_to_json(const CospectralCertificate& c) {
  Json witness = Json::array();
  for (std::size_t i = 0; i < c.gamma_first.size(); ++i)
    witness.push_back({{"factor", i},
                       {"first", main_function_to_json(c.gamma_first[i])},
                       {"second", main_function_to_json(c.gamma_second[i])}});
  return {{"kind", cospectral_kind_name(c.kind)},
          {"first", generalized_spec_to_json(c.first)},
          {"second", generalized_spec_to_json(c.second)},
          {"cospectral", c.cospectral()},
          {"charpoly", polynomial_to_json(c.charpoly_first)},
          {"charpoly_factored", to_factored_string(c.charpoly_first)},
          {"isomorphic", c.isomorphic ? Json(*c.isomorphic) : Json("unknown")},
          {"gamma_witness", witness}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hmjoin
