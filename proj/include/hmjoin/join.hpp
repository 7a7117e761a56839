#pragma once

#include <span>
#include <string>
#include <vector>

#include "hmjoin/graph.hpp"

namespace hmjoin {

/// Per-vertex labels in 1..m. A partial map (produced by label reduction) may
/// also hold kNoLabel, which contributes an all-zero row to the indexing matrix.
struct IndexingMap {
  static constexpr int kNoLabel = 0;

  int m = 1;
  std::vector<int> labels;

  bool is_total() const;
  // Vertices carrying `label`.
  std::vector<int> preimage(int label) const;
  friend bool operator==(const IndexingMap&, const IndexingMap&) = default;
};

/// Host H on k vertices, factors G_1..G_k, and one indexing map per factor.
struct JoinSpec {
  Graph host;
  std::vector<Graph> factors;
  int m = 1;
  std::vector<IndexingMap> indexing;

  std::size_t k() const { return factors.size(); }
  int total_order() const;
  // Offset of factor i in the concatenated vertex order.
  std::vector<int> offsets() const;
  // Throws InvalidParameters describing the first violated invariant.
  void validate(bool allow_partial = false) const;
  bool rho(std::size_t i, std::size_t j) const { return host.has_edge(static_cast<int>(i), static_cast<int>(j)); }

  friend bool operator==(const JoinSpec&, const JoinSpec&) = default;
};

// n × m 0/1 matrix with (E)_{st} = 1 iff I(v^s) = t.
QMatrix indexing_matrix(const Graph& g, const IndexingMap& im);

Graph hm_join(const JoinSpec& spec);

// A(G) assembled blockwise: A(G_i) on the diagonal, ρ_ij E_i E_j^t off it.
QMatrix blockwise_adjacency(const JoinSpec& spec);

// H-generalized join built straight from its definition (cross edges between
// S_i and S_j whenever v_i ~ v_j in H).
Graph generalized_join(const Graph& host, std::span<const Graph> factors,
                       std::span<const std::vector<int>> subsets);

// Realization with m = k + 1: label 1 on S_i, label i + 1 elsewhere.
JoinSpec generalized_to_hm(const Graph& host, std::span<const Graph> factors,
                           std::span<const std::vector<int>> subsets);

struct DegreeCorrections {
  // diag(𝒟_i): extra degree each vertex of G_i receives from cross edges.
  std::vector<std::vector<int>> diagonals;
  // w_i = Σ over H-neighbours l of |I_l^{-1}(1)|; equals Σ |S_l| for
  // realizations of generalized joins.
  std::vector<int> w;
};

DegreeCorrections degree_corrections(const JoinSpec& spec);

enum class ReductionMode { unused, global_exclusive, neighbor_exclusive };

ReductionMode reduction_mode_from_name(const std::string& name);
std::string reduction_mode_name(ReductionMode mode);

struct ReductionReport {
  JoinSpec reduced;
  // Original label values whose columns were deleted, ascending.
  std::vector<int> deleted_labels;
  int original_m = 0;
  // |deleted| and m − |deleted|; both are reported because the count the
  // reduced join is "expressed over" is stated both ways in the literature.
  int deleted_count() const { return static_cast<int>(deleted_labels.size()); }
  int remaining_count() const { return original_m - deleted_count(); }
};

// Deletes every label the mode deems removable and renumbers the survivors
// 1..m' in order. The blockwise adjacency is unchanged.
//   unused:             labels no vertex carries
//   global_exclusive:   labels every carrier of which lies in one factor
//   neighbor_exclusive: labels never shared across an edge of H
ReductionReport reduce_labels(const JoinSpec& spec, ReductionMode mode);

}  // namespace hmjoin
