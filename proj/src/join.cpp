#include "hmjoin/join.hpp"

#include <algorithm>
#include <set>

#include "hmjoin/errors.hpp"

namespace hmjoin {

bool IndexingMap::is_total() const {
  return std::all_of(labels.begin(), labels.end(), [&](int l) { return l >= 1 && l <= m; });
}

std::vector<int> IndexingMap::preimage(int label) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == label) out.push_back(static_cast<int>(v));
  return out;
}

int JoinSpec::total_order() const {
  int n = 0;
  for (const auto& g : factors) n += g.order();
  return n;
}

std::vector<int> JoinSpec::offsets() const {
  std::vector<int> off(factors.size() + 1, 0);
  for (std::size_t i = 0; i < factors.size(); ++i) off[i + 1] = off[i] + factors[i].order();
  return off;
}

void JoinSpec::validate(bool allow_partial) const {
  if (factors.empty()) throw InvalidParameters("join needs at least one factor");
  if (host.order() != static_cast<int>(factors.size()))
    throw InvalidParameters("host has " + std::to_string(host.order()) + " vertices but there are " +
                            std::to_string(factors.size()) + " factors");
  if (m < 1) throw InvalidParameters("label count m must be at least 1");
  if (indexing.size() != factors.size())
    throw InvalidParameters("need one indexing map per factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto where = "factor " + std::to_string(i);
    if (factors[i].order() == 0) throw InvalidParameters(where + " has no vertices");
    const auto& im = indexing[i];
    if (im.m != m) throw InvalidParameters(where + ": indexing map label count differs from m");
    if (im.labels.size() != static_cast<std::size_t>(factors[i].order()))
      throw SizeMismatch(where + ": indexing map has " + std::to_string(im.labels.size()) + " labels for " +
                         std::to_string(factors[i].order()) + " vertices");
    for (std::size_t v = 0; v < im.labels.size(); ++v) {
      int l = im.labels[v];
      bool ok = (l >= 1 && l <= m) || (allow_partial && l == IndexingMap::kNoLabel);
      if (!ok)
        throw InvalidParameters(where + ", vertex " + std::to_string(v) + ": label " + std::to_string(l) +
                                " outside [1, " + std::to_string(m) + "]");
    }
  }
}

QMatrix indexing_matrix(const Graph& g, const IndexingMap& im) {
  if (im.labels.size() != static_cast<std::size_t>(g.order()))
    throw SizeMismatch("indexing map has " + std::to_string(im.labels.size()) + " labels for " +
                       std::to_string(g.order()) + " vertices");
  QMatrix e(static_cast<std::size_t>(g.order()), static_cast<std::size_t>(im.m));
  for (std::size_t s = 0; s < im.labels.size(); ++s) {
    int l = im.labels[s];
    if (l == IndexingMap::kNoLabel) continue;
    if (l < 1 || l > im.m) throw InvalidParameters("label " + std::to_string(l) + " outside [1, m]");
    e(s, static_cast<std::size_t>(l - 1)) = 1;
  }
  return e;
}

Graph hm_join(const JoinSpec& spec) {
  spec.validate(true);
  const auto off = spec.offsets();
  GraphBuilder b(spec.total_order());
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (auto [u, v] : spec.factors[i].edges()) b.add_edge(off[i] + u, off[i] + v);
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (std::size_t j = i + 1; j < spec.k(); ++j) {
      if (!spec.rho(i, j)) continue;
      const auto& li = spec.indexing[i].labels;
      const auto& lj = spec.indexing[j].labels;
      for (std::size_t u = 0; u < li.size(); ++u) {
        if (li[u] == IndexingMap::kNoLabel) continue;
        for (std::size_t v = 0; v < lj.size(); ++v)
          if (li[u] == lj[v]) b.add_edge(off[i] + static_cast<int>(u), off[j] + static_cast<int>(v));
      }
    }
  return std::move(b).build();
}

QMatrix blockwise_adjacency(const JoinSpec& spec) {
  spec.validate(true);
  const auto off = spec.offsets();
  const auto n = static_cast<std::size_t>(spec.total_order());
  std::vector<QMatrix> e;
  for (std::size_t i = 0; i < spec.k(); ++i) e.push_back(indexing_matrix(spec.factors[i], spec.indexing[i]));
  QMatrix a(n, n);
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const auto oi = static_cast<std::size_t>(off[i]);
    a.set_block(oi, oi, spec.factors[i].adjacency_matrix());
    for (std::size_t j = 0; j < spec.k(); ++j) {
      if (i == j || !spec.rho(i, j)) continue;
      a.set_block(oi, static_cast<std::size_t>(off[j]), e[i] * e[j].transpose());
    }
  }
  return a;
}

namespace {

void check_subsets(std::span<const Graph> factors, std::span<const std::vector<int>> subsets) {
  if (subsets.size() != factors.size()) throw InvalidParameters("need one vertex subset per factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::set<int> seen;
    for (int v : subsets[i]) {
      if (v < 0 || v >= factors[i].order())
        throw InvalidParameters("subset " + std::to_string(i) + ": vertex " + std::to_string(v) + " out of range");
      if (!seen.insert(v).second)
        throw InvalidParameters("subset " + std::to_string(i) + ": vertex " + std::to_string(v) + " repeated");
    }
  }
}

}  // namespace

Graph generalized_join(const Graph& host, std::span<const Graph> factors, std::span<const std::vector<int>> subsets) {
  check_subsets(factors, subsets);
  if (host.order() != static_cast<int>(factors.size())) throw InvalidParameters("host order differs from factor count");
  std::vector<int> off(factors.size() + 1, 0);
  for (std::size_t i = 0; i < factors.size(); ++i) off[i + 1] = off[i] + factors[i].order();
  GraphBuilder b(off.back());
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (auto [u, v] : factors[i].edges()) b.add_edge(off[i] + u, off[i] + v);
  for (auto [i, j] : host.edges())
    for (int x : subsets[static_cast<std::size_t>(i)])
      for (int y : subsets[static_cast<std::size_t>(j)])
        b.add_edge(off[static_cast<std::size_t>(i)] + x, off[static_cast<std::size_t>(j)] + y);
  return std::move(b).build();
}

JoinSpec generalized_to_hm(const Graph& host, std::span<const Graph> factors, std::span<const std::vector<int>> subsets) {
  check_subsets(factors, subsets);
  JoinSpec spec;
  spec.host = host;
  spec.factors.assign(factors.begin(), factors.end());
  spec.m = static_cast<int>(factors.size()) + 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    IndexingMap im;
    im.m = spec.m;
    im.labels.assign(static_cast<std::size_t>(factors[i].order()), static_cast<int>(i) + 2);
    for (int v : subsets[i]) im.labels[static_cast<std::size_t>(v)] = 1;
    spec.indexing.push_back(std::move(im));
  }
  spec.validate();
  return spec;
}

DegreeCorrections degree_corrections(const JoinSpec& spec) {
  spec.validate(true);
  DegreeCorrections out;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    std::vector<int> diag(spec.indexing[i].labels.size(), 0);
    int w = 0;
    for (std::size_t j = 0; j < spec.k(); ++j) {
      if (i == j || !spec.rho(i, j)) continue;
      // Count label classes of the neighbour once.
      std::vector<int> count(static_cast<std::size_t>(spec.m) + 1, 0);
      for (int l : spec.indexing[j].labels)
        if (l != IndexingMap::kNoLabel) ++count[static_cast<std::size_t>(l)];
      for (std::size_t s = 0; s < diag.size(); ++s) {
        int l = spec.indexing[i].labels[s];
        if (l != IndexingMap::kNoLabel) diag[s] += count[static_cast<std::size_t>(l)];
      }
      w += count[1];
    }
    out.diagonals.push_back(std::move(diag));
    out.w.push_back(w);
  }
  return out;
}

ReductionMode reduction_mode_from_name(const std::string& name) {
  if (name == "unused") return ReductionMode::unused;
  if (name == "global-exclusive" || name == "global_exclusive") return ReductionMode::global_exclusive;
  if (name == "neighbor-exclusive" || name == "neighbor_exclusive") return ReductionMode::neighbor_exclusive;
  throw InvalidParameters("unknown reduction mode '" + name + "'");
}

std::string reduction_mode_name(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::unused: return "unused";
    case ReductionMode::global_exclusive: return "global-exclusive";
    case ReductionMode::neighbor_exclusive: return "neighbor-exclusive";
  }
  return "?";
}

ReductionReport reduce_labels(const JoinSpec& spec, ReductionMode mode) {
  spec.validate(true);
  const auto m = static_cast<std::size_t>(spec.m);
  // carriers[i][c]: factor i carries label c.
  std::vector<std::vector<char>> carriers(spec.k(), std::vector<char>(m + 1, 0));
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (int l : spec.indexing[i].labels)
      if (l != IndexingMap::kNoLabel) carriers[i][static_cast<std::size_t>(l)] = 1;

  std::vector<char> deletable(m + 1, 0);
  for (std::size_t c = 1; c <= m; ++c) {
    std::size_t factors_with_c = 0;
    for (std::size_t i = 0; i < spec.k(); ++i) factors_with_c += carriers[i][c] ? 1 : 0;
    switch (mode) {
      case ReductionMode::unused: deletable[c] = factors_with_c == 0; break;
      case ReductionMode::global_exclusive: deletable[c] = factors_with_c <= 1; break;
      case ReductionMode::neighbor_exclusive: {
        bool shared = false;
        for (auto [i, j] : spec.host.edges())
          shared = shared || (carriers[static_cast<std::size_t>(i)][c] && carriers[static_cast<std::size_t>(j)][c]);
        deletable[c] = !shared;
        break;
      }
    }
  }

  ReductionReport report;
  report.original_m = spec.m;
  std::vector<int> renumber(m + 1, IndexingMap::kNoLabel);
  int next = 1;
  for (std::size_t c = 1; c <= m; ++c) {
    if (deletable[c]) report.deleted_labels.push_back(static_cast<int>(c));
    else renumber[c] = next++;
  }
  report.reduced = spec;
  // An H_0-join is not meaningful; keep one (all-zero) column when every label goes.
  report.reduced.m = std::max(1, next - 1);
  for (auto& im : report.reduced.indexing) {
    im.m = report.reduced.m;
    for (int& l : im.labels) l = l == IndexingMap::kNoLabel ? l : renumber[static_cast<std::size_t>(l)];
  }
  return report;
}

}  // namespace hmjoin
