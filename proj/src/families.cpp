#include "hmjoin/families.hpp"

#include <numeric>

#include "hmjoin/errors.hpp"

namespace hmjoin {

namespace {

std::vector<int> identity_alignment(int n) {
  std::vector<int> al(static_cast<std::size_t>(n));
  std::iota(al.begin(), al.end(), 0);
  return al;
}

IndexingMap make_map(int m, std::vector<int> labels) { return IndexingMap{m, std::move(labels)}; }

Graph k2() { return make_named(Family::complete, {2}); }

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidParameters(what + ": expected an integer, got '" + s + "'");
}

// Shared by lollipop and tadpole: head graph with v its last vertex.
FamilyRealization pendant_path(const Graph& head, int n) {
  const int m = head.order();
  GraphBuilder b(m + n);
  for (auto [x, y] : head.edges()) b.add_edge(x, y);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(m + i, m + i + 1);
  b.add_edge(m - 1, m);

  FamilyRealization r;
  r.direct = std::move(b).build();
  r.spec.host = k2();
  r.spec.factors = {head, make_named(Family::path, {n})};
  r.spec.m = 3;
  std::vector<int> l1(static_cast<std::size_t>(m), 1);
  l1.back() = 2;
  std::vector<int> l2(static_cast<std::size_t>(n), 3);
  l2.front() = 2;
  r.spec.indexing = {make_map(3, std::move(l1)), make_map(3, std::move(l2))};
  r.alignment = identity_alignment(m + n);
  return r;
}

}  // namespace

bool realization_matches(const FamilyRealization& r) {
  return hm_join(r.spec).relabeled(r.alignment) == r.direct;
}

FamilyRealization cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  if (na < 1 || nb < 1) throw InvalidParameters("cartesian product: both graphs need a vertex");
  GraphBuilder d(na * nb);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v)
      for (int u2 = 0; u2 < na; ++u2)
        for (int v2 = 0; v2 < nb; ++v2) {
          int x = u * nb + v, y = u2 * nb + v2;
          if (x >= y) continue;
          if ((u == u2 && b.has_edge(v, v2)) || (v == v2 && a.has_edge(u, u2))) d.add_edge(x, y);
        }

  FamilyRealization r;
  r.direct = std::move(d).build();
  r.spec.host = a;
  r.spec.factors.assign(static_cast<std::size_t>(na), b);
  r.spec.m = nb;
  std::vector<int> labels(static_cast<std::size_t>(nb));
  std::iota(labels.begin(), labels.end(), 1);
  r.spec.indexing.assign(static_cast<std::size_t>(na), make_map(nb, labels));
  r.alignment = identity_alignment(na * nb);
  return r;
}

FamilyRealization generalized_petersen(int n, int k) {
  if (n < 5) throw InvalidParameters("generalized Petersen: n must be at least 5");
  if (k < 1 || 2 * k >= n) throw InvalidParameters("generalized Petersen: need 1 <= k < n/2");
  GraphBuilder d(2 * n);
  for (int i = 0; i < n; ++i) {
    d.add_edge(i, (i + 1) % n);
    d.add_edge(i, n + i);
    d.add_edge(n + i, n + (i + k) % n);
  }

  const int g = std::gcd(n, k);
  const int len = n / g;
  // Inner factor: g disjoint cycles, each listed along its b-orbit.
  std::vector<Graph> cycles(static_cast<std::size_t>(g), make_named(Family::cycle, {len}));
  FamilyRealization r;
  r.direct = std::move(d).build();
  r.spec.host = k2();
  r.spec.factors = {make_named(Family::cycle, {n}), disjoint_union(cycles)};
  r.spec.m = n;
  std::vector<int> outer(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
  r.alignment.resize(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    outer[static_cast<std::size_t>(i)] = i + 1;
    r.alignment[static_cast<std::size_t>(i)] = i;
  }
  for (int c = 0; c < g; ++c)
    for (int j = 0; j < len; ++j) {
      const int pos = c * len + j;
      const int b = (c + j * k) % n;
      inner[static_cast<std::size_t>(pos)] = b + 1;
      r.alignment[static_cast<std::size_t>(n + pos)] = n + b;
    }
  r.spec.indexing = {make_map(n, std::move(outer)), make_map(n, std::move(inner))};
  return r;
}

FamilyRealization generalized_helm(int n, int m) {
  if (n < 3) throw InvalidParameters("generalized helm: n must be at least 3");
  if (m < 1) throw InvalidParameters("generalized helm: m must be at least 1");
  const int plen = m + 1;
  const int total = n + 1 + n * plen;
  GraphBuilder d(total);
  for (int i = 0; i < n; ++i) {
    d.add_edge(i, (i + 1) % n);
    d.add_edge(i, n);
    const int start = n + 1 + i * plen;
    d.add_edge(i, start);
    for (int t = 0; t + 1 < plen; ++t) d.add_edge(start + t, start + t + 1);
  }

  std::vector<Graph> paths(static_cast<std::size_t>(n), make_named(Family::path, {plen}));
  FamilyRealization r;
  r.direct = std::move(d).build();
  r.spec.host = k2();
  r.spec.factors = {make_named(Family::wheel, {n}), disjoint_union(paths)};
  r.spec.m = n + 2;
  std::vector<int> l1(static_cast<std::size_t>(n + 1)), l2(static_cast<std::size_t>(n * plen), n + 2);
  for (int i = 0; i < n; ++i) {
    l1[static_cast<std::size_t>(i)] = i + 1;
    l2[static_cast<std::size_t>(i * plen)] = i + 1;
  }
  l1[static_cast<std::size_t>(n)] = n + 1;
  r.spec.indexing = {make_map(n + 2, std::move(l1)), make_map(n + 2, std::move(l2))};
  r.alignment = identity_alignment(total);
  return r;
}

FamilyRealization generalized_web(int t, int n) {
  if (t < 1) throw InvalidParameters("generalized web: t must be at least 1");
  if (n < 3) throw InvalidParameters("generalized web: n must be at least 3");
  const int total = (t + 2) * n + 1;

  // Start from the helm H_n and repeat: close the pendants into a cycle, then
  // hang a fresh pendant on each of them.
  GraphBuilder d(total);
  for (int i = 0; i < n; ++i) {
    d.add_edge(i, (i + 1) % n);
    d.add_edge(i, n);
  }
  int previous = 0;  // first vertex of the layer the pendants hang from
  int pendants = n + 1;
  for (int i = 0; i < n; ++i) d.add_edge(previous + i, pendants + i);
  for (int round = 0; round < t; ++round) {
    for (int i = 0; i < n; ++i) d.add_edge(pendants + i, pendants + (i + 1) % n);
    previous = pendants;
    pendants += n;
    for (int i = 0; i < n; ++i) d.add_edge(previous + i, pendants + i);
  }

  FamilyRealization r;
  r.direct = std::move(d).build();
  r.spec.host = make_named(Family::path, {t + 2});
  r.spec.m = n + 1;
  r.spec.factors.push_back(make_named(Family::wheel, {n}));
  for (int j = 0; j < t; ++j) r.spec.factors.push_back(make_named(Family::cycle, {n}));
  r.spec.factors.push_back(make_named(Family::empty, {n}));
  std::vector<int> layer(static_cast<std::size_t>(n));
  std::iota(layer.begin(), layer.end(), 2);
  std::vector<int> first = layer;
  first.push_back(1);
  r.spec.indexing.push_back(make_map(n + 1, std::move(first)));
  for (int j = 0; j <= t; ++j) r.spec.indexing.push_back(make_map(n + 1, layer));
  r.alignment = identity_alignment(total);
  return r;
}

FamilyRealization lollipop(int m, int n) {
  if (m < 3) throw InvalidParameters("lollipop: m must be at least 3");
  if (n < 1) throw InvalidParameters("lollipop: n must be at least 1");
  return pendant_path(make_named(Family::complete, {m}), n);
}

FamilyRealization tadpole(int m, int n) {
  if (m < 3) throw InvalidParameters("tadpole: m must be at least 3");
  if (n < 1) throw InvalidParameters("tadpole: n must be at least 1");
  return pendant_path(make_named(Family::cycle, {m}), n);
}

Graph parse_named_graph(const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw InvalidParameters("graph token '" + token + "' must look like kind:p1,p2");
  std::vector<int> params;
  std::string rest = token.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    params.push_back(parse_int(rest.substr(pos, comma - pos), "graph token '" + token + "'"));
    pos = comma + 1;
  }
  return make_named(token.substr(0, colon), params);
}

FamilyRealization make_family(const std::string& name, const std::vector<std::string>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw InvalidParameters(name + " expects " + std::to_string(count) + " arguments, got " +
                              std::to_string(args.size()));
  };
  auto arg = [&](std::size_t i) { return parse_int(args[i], name + " argument " + std::to_string(i + 1)); };
  if (name == "product" || name == "cartesian") {
    need(2);
    return cartesian_product(parse_named_graph(args[0]), parse_named_graph(args[1]));
  }
  need(2);
  if (name == "petersen") return generalized_petersen(arg(0), arg(1));
  if (name == "helm") return generalized_helm(arg(0), arg(1));
  if (name == "web") return generalized_web(arg(0), arg(1));
  if (name == "lollipop") return lollipop(arg(0), arg(1));
  if (name == "tadpole") return tadpole(arg(0), arg(1));
  throw InvalidParameters("unknown family '" + name + "'");
}

}  // namespace hmjoin
