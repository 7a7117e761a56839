#pragma once

#include <string>
#include <vector>

#include "hmjoin/graph.hpp"
#include "hmjoin/join.hpp"

namespace hmjoin {

/// A graph family member built twice: from its textbook definition (`direct`)
/// and as an H_m-join (`spec`). alignment[s] is the direct vertex playing the
/// role of vertex s of hm_join(spec).
struct FamilyRealization {
  Graph direct;
  JoinSpec spec;
  std::vector<int> alignment;
};

// True iff hm_join(spec) relabeled by the alignment equals the direct graph.
bool realization_matches(const FamilyRealization& r);

// (u, v) ~ (u', v') iff u = u' and v ~ v', or v = v' and u ~ u'. Direct vertex
// (u, v) is u * |b| + v. The spec is the (a)_{|b|}-join of |a| copies of b with
// I_i(v^j) = j + 1.
FamilyRealization cartesian_product(const Graph& a, const Graph& b);

// P(n, k), n >= 5, 1 <= k < n/2. Direct order a_0..a_{n-1}, b_0..b_{n-1}.
// Factor 2 is d = gcd(n, k) cycles; cycle c lists b_c, b_{c+k}, b_{c+2k}, ...
FamilyRealization generalized_petersen(int n, int k);

// H_n^m, n >= 3, m >= 1: the wheel W_n with a path P_{m+1} bridged to every rim
// vertex. Direct order: rim, hub, then the n paths starting at their attach
// vertex. Labels are positional (rim i and the attach vertex of path i share
// label i + 1, hub n + 1, other path vertices n + 2) so that each rim vertex
// meets only its own path.
FamilyRealization generalized_helm(int n, int m);

// W(t, n), t >= 1, n >= 3: the helm H_n after t rounds of closing the pendant
// layer into a cycle and hanging a new pendant on each of its vertices.
// (t + 2)n + 1 vertices: rim, hub, t cycle layers, pendant layer. As a
// (P_{t+2})_{n+1}-join the hub carries label 1 and position k of every layer
// carries k + 2 (0-based k).
FamilyRealization generalized_web(int t, int n);

// L(m, n), m >= 3, n >= 1: K_m with P_n hung from its last vertex v by the
// first path vertex u.
FamilyRealization lollipop(int m, int n);

// T(m, n): as lollipop with C_m in place of K_m.
FamilyRealization tadpole(int m, int n);

// Named dispatch for the command line: petersen n k, helm n m, web t n,
// lollipop m n, tadpole m n, product <graph> <graph> where <graph> is
// "kind:p1,p2" (for example "path:3" or "complete_bipartite:2,3").
FamilyRealization make_family(const std::string& name, const std::vector<std::string>& args);

// Parses "kind:p1,p2" into a named graph.
Graph parse_named_graph(const std::string& token);

}  // namespace hmjoin
