#include "hmjoin/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "hmjoin/errors.hpp"

namespace hmjoin {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidParameters("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidParameters("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidParameters("loop at vertex " + std::to_string(u));
    adj_[index(u, v)] = 1;
    adj_[index(v, u)] = 1;
  }
}

std::size_t Graph::index(int u, int v) const {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[index(v, u)];
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += a;
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

bool Graph::is_regular() const {
  if (n_ == 0) return true;
  int d0 = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d0) return false;
  return true;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw SizeMismatch("label count differs from vertex count");
  labels_ = std::move(labels);
}

QMatrix Graph::adjacency_matrix() const {
  QMatrix a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (has_edge(u, v)) a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
  return a;
}

QMatrix Graph::degree_matrix() const {
  QMatrix d(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = degree(v);
  return d;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw SizeMismatch("permutation length differs from order");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)]) throw InvalidParameters("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) b.add_edge(i, j);
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= graph_.n_ || v >= graph_.n_ || u == v)
    throw InvalidParameters("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  graph_.adj_[graph_.index(u, v)] = 1;
  graph_.adj_[graph_.index(v, u)] = 1;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Family family_from_name(std::string_view name) {
  if (name == "empty") return Family::empty;
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete_bipartite" || name == "bipartite") return Family::complete_bipartite;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  throw InvalidParameters("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::empty: return "empty";
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
  }
  return "?";
}

namespace {

void require(bool ok, Family f, const std::string& why) {
  if (!ok) throw InvalidParameters(family_name(f) + ": " + why);
}

Graph complete_bipartite(int a, int b) {
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return std::move(g).build();
}

}  // namespace

Graph make_named(Family kind, std::span<const int> params) {
  auto one_param = [&](int min) {
    require(params.size() == 1, kind, "expects one parameter");
    require(params[0] >= min, kind, "parameter must be at least " + std::to_string(min));
    return params[0];
  };
  switch (kind) {
    case Family::empty: return Graph(one_param(0));
    case Family::complete: {
      int n = one_param(0);
      GraphBuilder g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      return std::move(g).build();
    }
    case Family::path: {
      int n = one_param(0);
      GraphBuilder g(n);
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      return std::move(g).build();
    }
    case Family::cycle: {
      int n = one_param(3);
      GraphBuilder g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return std::move(g).build();
    }
    case Family::complete_bipartite:
      require(params.size() == 2, kind, "expects two parameters");
      require(params[0] >= 0 && params[1] >= 0, kind, "part sizes must be non-negative");
      return complete_bipartite(params[0], params[1]);
    case Family::star: {
      int leaves = 0;
      if (params.size() == 2) {
        require(params[0] == 1, kind, "two-parameter form must be [1, k]");
        leaves = params[1];
      } else {
        require(params.size() == 1, kind, "expects [k] or [1, k]");
        leaves = params[0];
      }
      require(leaves >= 0, kind, "leaf count must be non-negative");
      return complete_bipartite(1, leaves);
    }
    case Family::wheel: {
      int n = one_param(3);
      GraphBuilder g(n + 1);
      for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
        g.add_edge(v, n);
      }
      return std::move(g).build();
    }
  }
  throw InvalidParameters("unknown family");
}

Graph make_named(std::string_view kind, std::span<const int> params) {
  return make_named(family_from_name(kind), params);
}

Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const auto& g : gs) total += g.order();
  GraphBuilder b(total);
  int offset = 0;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) b.add_edge(offset + u, offset + v);
    offset += g.order();
  }
  return std::move(b).build();
}

void UniversalParams::validate() const {
  if (alpha == 0) throw InvalidParameters("universal matrix requires alpha != 0");
}

UniversalParams preset_from_name(std::string_view name) {
  if (name == "A" || name == "adjacency") return UniversalParams::adjacency();
  if (name == "L" || name == "laplacian") return UniversalParams::laplacian();
  if (name == "Q" || name == "signless") return UniversalParams::signless_laplacian();
  if (name == "S" || name == "seidel") return UniversalParams::seidel();
  constexpr std::string_view aalpha = "Aalpha:";
  if (name.substr(0, aalpha.size()) == aalpha) {
    auto p = UniversalParams::a_alpha(parse_rational(name.substr(aalpha.size())));
    p.validate();
    return p;
  }
  throw InvalidParameters("unknown preset '" + std::string(name) + "'");
}

QMatrix universal_matrix(const Graph& g, const UniversalParams& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(g.order());
  QMatrix u(n, n, p.gamma);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (g.has_edge(static_cast<int>(r), static_cast<int>(c))) u(r, c) += p.alpha;
    u(r, r) += p.beta + p.delta * g.degree(static_cast<int>(r));
  }
  return u;
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw SpecError("line 1", "missing vertex count");
  int n = -1;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n < 0) throw SpecError("line " + std::to_string(lineno), "invalid vertex count");
  }
  std::vector<Edge> edges;
  while (next_line()) {
    std::istringstream ls(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw SpecError("line " + std::to_string(lineno), "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw SpecError("line " + std::to_string(lineno), "invalid edge");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

}  // namespace hmjoin
