#include <doctest.h>

#include <set>

#include "hmjoin/errors.hpp"
#include "hmjoin/io.hpp"
#include "hmjoin/join.hpp"
#include "support.hpp"

using namespace hmjoin;
using hmjoin::testing::Rng;

namespace {

JoinSpec load(const std::string& name) { return hmjoin::testing::load_join(name); }

std::set<Edge> cross_edges(const JoinSpec& spec) {
  const Graph g = hm_join(spec);
  const auto off = spec.offsets();
  auto owner = [&](int v) {
    std::size_t i = 0;
    while (off[i + 1] <= v) ++i;
    return i;
  };
  std::set<Edge> out;
  for (auto [u, v] : g.edges())
    if (owner(u) != owner(v)) out.insert({u, v});
  return out;
}

}  // namespace

TEST_CASE("K_2 join of P_3 and P_4 with two labels") {
  const JoinSpec spec = load("k2_2_p3_p4.json");
  const QMatrix expected{{0, 1, 0, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1, 0}, {0, 1, 0, 0, 0, 0, 1},
                         {1, 1, 0, 0, 1, 0, 0}, {1, 1, 0, 1, 0, 1, 0}, {1, 1, 0, 0, 1, 0, 1},
                         {0, 0, 1, 0, 0, 1, 0}};
  CHECK(hm_join(spec).adjacency_matrix() == expected);
  CHECK(blockwise_adjacency(spec) == expected);
}

TEST_CASE("indexing matrix columns are label classes") {
  const Graph k5 = make_named(Family::complete, {5});
  const QMatrix e = indexing_matrix(k5, IndexingMap{2, {1, 1, 1, 2, 2}});
  CHECK(e == QMatrix{{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}});
  CHECK(IndexingMap{2, {1, 1, 1, 2, 2}}.preimage(2) == std::vector<int>{3, 4});
  CHECK_THROWS_AS(indexing_matrix(k5, IndexingMap{2, {1, 1}}), SizeMismatch);
}

TEST_CASE("five-label join over P_4 has exactly the drawn cross edges") {
  const JoinSpec spec = load("p4_five_labels.json");
  // Offsets: K_3 at 0, star at 3, C_5 at 7, K_{3,3} at 12.
  const std::set<Edge> drawn = {{4, 8},  {3, 8},  {5, 11}, {6, 7},  {9, 12},
                                {9, 15}, {9, 13}, {9, 16}, {10, 17}, {7, 14}};
  CHECK(cross_edges(spec) == drawn);
  CHECK(hm_join(spec).order() == 18);
}

TEST_CASE("the same five-label join is also a join over K_1 + P_3") {
  JoinSpec spec = load("p4_five_labels.json");
  const Graph original = hm_join(spec);
  spec.host = Graph(4, {{1, 2}, {2, 3}});
  CHECK(hm_join(spec) == original);
}

TEST_CASE("hm_join and blockwise assembly agree on random specs") {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const JoinSpec spec = hmjoin::testing::random_spec(rng);
    CHECK(hm_join(spec).adjacency_matrix() == blockwise_adjacency(spec));
  }
}

TEST_CASE("generalized join equals its H_{k+1}-join realization") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = hmjoin::testing::random_generalized(rng);
    const JoinSpec hm = generalized_to_hm(g.host, g.factors, g.subsets);
    CHECK(hm.m == static_cast<int>(g.k()) + 1);
    CHECK(hm_join(hm) == generalized_join(g.host, g.factors, g.subsets));
  }
}

TEST_CASE("generalized join realization labels") {
  const Graph p4 = make_named(Family::path, {4});
  const std::vector<Graph> factors = {make_named(Family::complete, {3}), make_named(Family::star, {3}),
                                      make_named(Family::cycle, {5}), make_named(Family::complete_bipartite, {3, 3})};
  const std::vector<std::vector<int>> subsets = {{0}, {2, 3}, {0, 2, 4}, {2, 5}};
  const JoinSpec hm = generalized_to_hm(p4, factors, subsets);
  CHECK(hm.indexing[0].labels == std::vector<int>{1, 2, 2});
  CHECK(hm.indexing[1].labels == std::vector<int>{3, 3, 1, 1});
  CHECK(hm.indexing[2].labels == std::vector<int>{1, 4, 1, 4, 1});
  CHECK(hm.indexing[3].labels == std::vector<int>{5, 5, 1, 5, 5, 1});
  CHECK(generalized_join(p4, factors, subsets).edge_count() == 3 + 3 + 5 + 9 + 2 + 6 + 6);
}

TEST_CASE("degree corrections count cross neighbours") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const JoinSpec spec = hmjoin::testing::random_spec(rng);
    const Graph g = hm_join(spec);
    const auto corr = degree_corrections(spec);
    const auto off = spec.offsets();
    for (std::size_t i = 0; i < spec.k(); ++i)
      for (int v = 0; v < spec.factors[i].order(); ++v)
        CHECK(g.degree(off[i] + v) == spec.factors[i].degree(v) + corr.diagonals[i][static_cast<std::size_t>(v)]);
  }
  const Graph p3 = make_named(Family::path, {3});
  const std::vector<Graph> fs = {p3, p3, p3};
  const std::vector<std::vector<int>> ss = {{0}, {0, 1}, {2}};
  const auto corr = degree_corrections(generalized_to_hm(p3, fs, ss));
  CHECK(corr.w == std::vector<int>{2, 2, 2});
  CHECK(corr.diagonals[1] == std::vector<int>{2, 2, 0});
}

TEST_CASE("validation names the violated invariant") {
  JoinSpec spec = load("p2_2_k2_k5.json");
  spec.indexing[1].labels[0] = 3;
  CHECK_THROWS_AS(spec.validate(), InvalidParameters);
  spec.indexing[1].labels[0] = 0;
  CHECK_THROWS_AS(spec.validate(), InvalidParameters);
  CHECK_NOTHROW(spec.validate(true));
  spec = load("p2_2_k2_k5.json");
  spec.factors.pop_back();
  CHECK_THROWS_AS(spec.validate(), InvalidParameters);
  spec = load("p2_2_k2_k5.json");
  spec.indexing[0].labels.push_back(1);
  CHECK_THROWS_AS(spec.validate(), SizeMismatch);
  spec = load("p2_2_k2_k5.json");
  spec.factors[0] = Graph(0);
  spec.indexing[0].labels.clear();
  CHECK_THROWS_AS(spec.validate(), InvalidParameters);
}

TEST_CASE("label reduction keeps the blockwise adjacency") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const JoinSpec spec = hmjoin::testing::random_spec(rng);
    for (auto mode : {ReductionMode::unused, ReductionMode::global_exclusive, ReductionMode::neighbor_exclusive}) {
      const auto r = reduce_labels(spec, mode);
      CHECK(blockwise_adjacency(r.reduced) == blockwise_adjacency(spec));
      CHECK(r.deleted_count() + r.remaining_count() == spec.m);
      CHECK(r.reduced.m >= 1);
    }
    const int unused = reduce_labels(spec, ReductionMode::unused).deleted_count();
    const int global = reduce_labels(spec, ReductionMode::global_exclusive).deleted_count();
    const int local = reduce_labels(spec, ReductionMode::neighbor_exclusive).deleted_count();
    CHECK(unused <= global);
    CHECK(global <= local);
  }
}

TEST_CASE("reduction modes on a small spec") {
  JoinSpec spec;
  spec.host = make_named(Family::path, {3});
  spec.factors = {make_named(Family::path, {2}), make_named(Family::path, {2}), make_named(Family::path, {2})};
  spec.m = 5;
  // Label 3 unused; 1 and 4 stay inside one factor; 2 sits in factors 0 and 2, not adjacent in P_3.
  spec.indexing = {{5, {2, 4}}, {5, {1, 5}}, {5, {2, 5}}};
  CHECK(reduce_labels(spec, ReductionMode::unused).deleted_labels == std::vector<int>{3});
  CHECK(reduce_labels(spec, ReductionMode::global_exclusive).deleted_labels == std::vector<int>{1, 3, 4});
  const auto local = reduce_labels(spec, ReductionMode::neighbor_exclusive);
  CHECK(local.deleted_labels == std::vector<int>{1, 2, 3, 4});
  CHECK(local.reduced.m == 1);
  CHECK(local.reduced.indexing[1].labels == std::vector<int>{0, 1});
  CHECK(reduction_mode_from_name("global-exclusive") == ReductionMode::global_exclusive);
  CHECK_THROWS_AS(reduction_mode_from_name("all"), InvalidParameters);
}
