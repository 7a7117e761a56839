#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmjoin/matrix.hpp"

namespace hmjoin {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..n-1. The vertex order is part of the
/// value: every matrix export uses it, and equality compares adjacency in it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return adj_[index(u, v)] != 0; }
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::size_t edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;
  bool is_regular() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  QMatrix adjacency_matrix() const;
  QMatrix degree_matrix() const;

  // Graph with vertex perm[v] of the result taking the role of v here.
  Graph relabeled(std::span<const int> perm) const;
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::size_t index(int u, int v) const;
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::string> labels_;
};

// Mutable companion used by constructions that add edges incrementally.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  Graph build() &&;
  int order() const { return graph_.n_; }

 private:
  Graph graph_;
};

enum class Family { empty, complete, path, cycle, complete_bipartite, star, wheel };

Family family_from_name(std::string_view name);
std::string family_name(Family f);

/// Standard graphs in documented vertex order:
///   empty [n], complete [n], path [n] and cycle [n] in traversal order,
///   complete_bipartite [a, b] with the a-side first, star [k] or [1, k]
///   with the center first, wheel [n] with the rim in cycle order and the hub last.
Graph make_named(Family kind, std::span<const int> params);
Graph make_named(std::string_view kind, std::span<const int> params);
inline Graph make_named(Family kind, std::initializer_list<int> params) {
  return make_named(kind, std::span<const int>(params.begin(), params.size()));
}

Graph disjoint_union(std::span<const Graph> gs);
inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Scalars of U(G) = αA + βI + γJ + δD.
struct UniversalParams {
  Rational alpha = 1;
  Rational beta = 0;
  Rational gamma = 0;
  Rational delta = 0;

  static UniversalParams adjacency() { return {1, 0, 0, 0}; }
  // L = D − A
  static UniversalParams laplacian() { return {-1, 0, 0, 1}; }
  // Q = D + A
  static UniversalParams signless_laplacian() { return {1, 0, 0, 1}; }
  // S = J − I − 2A
  static UniversalParams seidel() { return {-2, -1, 1, 0}; }
  // A_a = (1 − a)A + aD
  static UniversalParams a_alpha(const Rational& a) { return {1 - a, 0, 0, a}; }

  void validate() const;
  friend bool operator==(const UniversalParams&, const UniversalParams&) = default;
};

// Preset names: A, L, Q, seidel, Aalpha:<r>.
UniversalParams preset_from_name(std::string_view name);

QMatrix universal_matrix(const Graph& g, const UniversalParams& p);

// Edge-list text: first line n, then one "u v" line per edge in lexicographic order.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace hmjoin
