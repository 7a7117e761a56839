// One line per acceptance criterion; exits non-zero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "hmjoin/cospectral.hpp"
#include "hmjoin/errors.hpp"
#include "hmjoin/families.hpp"
#include "hmjoin/linalg.hpp"
#include "hmjoin/spectra.hpp"
#include "support.hpp"

using namespace hmjoin;
using hmjoin::testing::load_join;
using hmjoin::testing::poly;
using hmjoin::testing::rf;
using hmjoin::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool gamma_equals(const MainFunction& mf, const std::vector<std::vector<RationalFunction>>& expected) {
  if (mf.matrix.rows() != expected.size()) return false;
  for (std::size_t r = 0; r < expected.size(); ++r) {
    if (mf.matrix.cols() != expected[r].size()) return false;
    for (std::size_t c = 0; c < expected[r].size(); ++c)
      if (!(mf.matrix(r, c) == expected[r][c])) return false;
  }
  return true;
}

std::vector<JoinSpec> random_specs(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<JoinSpec> out;
  for (int i = 0; i < count; ++i) out.push_back(hmjoin::testing::random_spec(rng, 4, 6, 4));
  return out;
}

const std::vector<JoinSpec>& suite_specs() {
  static const std::vector<JoinSpec> specs = random_specs(20240601, 200);
  return specs;
}

std::map<const JoinSpec*, SpectralReport>& suite_reports() {
  static std::map<const JoinSpec*, SpectralReport> reports;
  return reports;
}

Outcome k2_k5() {
  Outcome o;
  const auto t0 = Clock::now();
  const JoinSpec spec = load_join("p2_2_k2_k5.json");
  const Polynomial expected = poly({1, 2}) * poly({1, -5}) * poly({1, -1}) * pow(poly({1, 1}), 4);
  const auto r = block_charpoly(spec);
  o.expect(charpoly(hm_join(spec).adjacency_matrix()) == expected, "direct charpoly differs");
  o.expect(r.charpoly_direct == expected, "report direct charpoly differs");
  o.expect(r.charpoly_block == expected, "block charpoly differs");
  const double dt = seconds_since(t0);
  o.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = to_factored_string(expected) + " in " + std::to_string(dt) + " s";
  return o;
}

Outcome p3_three_factors() {
  Outcome o;
  const auto t0 = Clock::now();
  const JoinSpec spec = load_join("p3_3.json");
  const Polynomial expected = poly({1, 0, -12, -2, 39, 6, -34, -10, 2, 0});
  const auto r = block_charpoly(spec);
  o.expect(charpoly(hm_join(spec).adjacency_matrix()) == expected, "direct charpoly differs");
  o.expect(r.charpoly_block == expected, "block charpoly differs");
  const auto d1 = std::initializer_list<long>{1, 0, -1};
  const auto d2 = std::initializer_list<long>{1, 0, -2, 0};
  const auto d3 = std::initializer_list<long>{1, 0, -3, 0};
  o.expect(gamma_equals(r.main_functions[0], {{rf({1, 0}, d1), rf({1}, d1), 0}, {rf({1}, d1), rf({1, 0}, d1), 0}, {0, 0, 0}}),
           "first main function differs");
  o.expect(gamma_equals(r.main_functions[1], {{rf({1, 0, -1}, d2), rf({1, 0}, d2), rf({1}, d2)},
                                              {rf({1, 0}, d2), rf({1, 0, 0}, d2), rf({1, 0}, d2)},
                                              {rf({1}, d2), rf({1, 0}, d2), rf({1, 0, -1}, d2)}}),
           "second main function differs");
  o.expect(gamma_equals(r.main_functions[2],
                        {{rf({2, 2, -2}, d3), 0, rf({2, 2}, d3)}, {0, 0, 0}, {rf({2, 2}, d3), 0, rf({2, 0, -2}, d3)}}),
           "third main function differs");
  const double dt = seconds_since(t0);
  o.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = to_factored_string(expected) + ", three main functions match, " + std::to_string(dt) + " s";
  return o;
}

Outcome e_main() {
  Outcome o;
  auto flags = [](const JoinSpec& s, std::size_t i) {
    std::map<Rational, bool> out;
    for (const auto& c : classify_e_main(s.factors[i].adjacency_matrix(), indexing_matrix(s.factors[i], s.indexing[i]))) {
      if (c.value) out[*c.value] = c.e_main;
    }
    return out;
  };
  const JoinSpec a = load_join("p2_2_k2_k5.json");
  const auto k2 = flags(a, 0), k5 = flags(a, 1);
  o.expect(k2.size() == 2 && k2.at(Rational(1)) && !k2.at(Rational(-1)), "K_2 flags wrong");
  o.expect(k5.size() == 2 && k5.at(Rational(4)) && k5.at(Rational(-1)), "K_5 flags wrong");
  const JoinSpec b = load_join("p3_3.json");
  int classes = 0;
  for (std::size_t i = 0; i < b.k(); ++i)
    for (const auto& c : classify_e_main(b.factors[i].adjacency_matrix(), indexing_matrix(b.factors[i], b.indexing[i]))) {
      ++classes;
      o.expect(c.e_main, "factor " + std::to_string(i) + " class " + to_string(c.defining) + " not main");
    }
  if (o.ok) o.detail = "K_2 {1 main, -1 non-main}, K_5 {4, -1 main}, " + std::to_string(classes) + " classes all main";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  auto& reports = suite_reports();
  for (const auto& spec : suite_specs()) {
    SpectralReport r;
    try {
      r = block_charpoly(spec);
    } catch (const Error& e) {
      o.fail(e.what());
      continue;
    }
    Polynomial lhs = r.charpoly_direct, rhs = r.phi_polynomial;
    for (std::size_t i = 0; i < spec.k(); ++i) {
      lhs *= pow(r.main_functions[i].denominator, spec.m);
      rhs *= r.factor_charpolys[i];
    }
    o.expect(lhs == rhs, "identity fails");
    o.expect(r.charpoly_direct == charpoly(hm_join(spec).adjacency_matrix()), "direct oracle differs");
    reports.emplace(&spec, std::move(r));
  }
  const double dt = seconds_since(t0);
  o.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = "200 specs in " + std::to_string(dt) + " s";
  return o;
}

Outcome carry_forward_suite() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& spec : suite_specs()) {
    auto it = suite_reports().find(&spec);
    const SpectralReport r = it != suite_reports().end() ? it->second : block_charpoly(spec);
    for (const auto& row : r.carry_forward) {
      ++rows;
      o.expect(row.observed >= row.guaranteed, "ledger row below bound");
    }
    for (const auto& row : r.combined) o.expect(row.observed >= row.guaranteed, "combined row below bound");
  }
  const auto r = block_charpoly(load_join("p2_2_k2_k5.json"));
  bool found = false;
  for (const auto& row : r.combined)
    if (row.value == Rational(-1)) {
      found = true;
      o.expect(row.guaranteed == 3 && row.observed == 4, "-1 row is not bound 3 / observed 4");
    }
  o.expect(found, "no combined row for -1");
  if (o.ok) o.detail = std::to_string(rows) + " rows hold; -1 observed 4 >= bound 3";
  return o;
}

Outcome reduction_suite() {
  Outcome o;
  for (const auto& spec : random_specs(77, 100))
    for (auto mode : {ReductionMode::unused, ReductionMode::global_exclusive, ReductionMode::neighbor_exclusive}) {
      const auto rep = reduce_labels(spec, mode);
      o.expect(blockwise_adjacency(rep.reduced) == blockwise_adjacency(spec),
               "adjacency changed under " + reduction_mode_name(mode));
    }
  const auto lol = lollipop(4, 3);
  const auto rep = reduce_labels(lol.spec, ReductionMode::neighbor_exclusive);
  o.expect(rep.reduced.m == 1, "lollipop did not reach one column");
  int ones0 = 0, ones1 = 0;
  for (int l : rep.reduced.indexing[0].labels) ones0 += l == 1;
  for (int l : rep.reduced.indexing[1].labels) ones1 += l == 1;
  o.expect(ones0 == 1 && ones1 == 1, "lollipop column is not a single 1 per factor");
  const QMatrix a = blockwise_adjacency(rep.reduced);
  const std::size_t n0 = static_cast<std::size_t>(lol.spec.factors[0].order());
  int cross = 0;
  for (std::size_t r = 0; r < n0; ++r)
    for (std::size_t c = n0; c < a.cols(); ++c) cross += a(r, c) != 0;
  o.expect(cross == 1, "lollipop has " + std::to_string(cross) + " cross edges");
  if (o.ok) o.detail = "300 reductions preserve adjacency; lollipop -> m = 1, one cross edge";
  return o;
}

Outcome families_suite() {
  Outcome o;
  int count = 0;
  auto check = [&](const FamilyRealization& r, const std::string& name) {
    ++count;
    if (!realization_matches(r)) return o.fail(name + ": adjacency differs");
    if (block_charpoly(r.spec).charpoly_block != charpoly(r.direct.adjacency_matrix()))
      o.fail(name + ": charpoly differs");
  };
  std::vector<std::pair<std::string, Graph>> small;
  for (int n = 1; n <= 6; ++n) small.emplace_back("P" + std::to_string(n), make_named(Family::path, {n}));
  for (int n = 3; n <= 6; ++n) small.emplace_back("C" + std::to_string(n), make_named(Family::cycle, {n}));
  for (int n = 1; n <= 5; ++n) small.emplace_back("S" + std::to_string(n), make_named(Family::star, {n}));
  for (const auto& [na, a] : small)
    for (const auto& [nb, b] : small) check(cartesian_product(a, b), na + "x" + nb);
  for (int n = 5; n <= 10; ++n)
    for (int k = 1; 2 * k < n; ++k) check(generalized_petersen(n, k), "P(" + std::to_string(n) + "," + std::to_string(k) + ")");
  for (int n = 3; n <= 12; ++n)
    for (int m = 1; m <= 8; ++m) check(generalized_helm(n, m), "helm " + std::to_string(n) + "," + std::to_string(m));
  for (int t = 1; t <= 3; ++t)
    for (int n = 3; n <= 12; ++n) check(generalized_web(t, n), "web " + std::to_string(t) + "," + std::to_string(n));
  for (int m = 3; m <= 8; ++m)
    for (int n = 1; n <= 12; ++n) {
      check(lollipop(m, n), "lollipop " + std::to_string(m) + "," + std::to_string(n));
      check(tadpole(m, n), "tadpole " + std::to_string(m) + "," + std::to_string(n));
    }
  if (o.ok) o.detail = std::to_string(count) + " family members agree";
  return o;
}

Outcome universal_suite() {
  Outcome o;
  Rng rng(909);
  for (const auto& spec : random_specs(31, 100)) {
    const UniversalParams p{hmjoin::testing::random_rational(rng, true), hmjoin::testing::random_rational(rng), 0,
                            hmjoin::testing::random_rational(rng)};
    o.expect(universal_block_charpoly(spec, p).charpoly_block == charpoly(universal_matrix(hm_join(spec), p)),
             "H_m-join universal charpoly differs");
  }
  for (int i = 0; i < 100; ++i) {
    const auto g = hmjoin::testing::random_generalized(rng, 3, 5);
    o.expect(generalized_universal_charpoly(g) == charpoly(universal_matrix(g.graph(), g.params)),
             "generalized universal charpoly differs");
  }
  if (o.ok) o.detail = "100 H_m-join and 100 generalized-join specs agree";
  return o;
}

Outcome closed_form_suite() {
  Outcome o;
  Rng rng(4646);
  auto regular = [&] {
    switch (rng.uniform(0, 2)) {
      case 0: return make_named(Family::cycle, {rng.uniform(3, 9)});
      case 1: return make_named(Family::complete, {rng.uniform(1, 7)});
      default: {
        const int a = rng.uniform(1, 4);
        return make_named(Family::complete_bipartite, {a, a});
      }
    }
  };
  auto all = [](const Graph& g) {
    std::vector<int> v(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
  };
  auto r = [&] { return hmjoin::testing::random_rational(rng); };
  std::map<ClosedFormCase, int> seen;
  for (int i = 0; i < 50; ++i) {
    // Each case is checked against the resolvent inside regular_gamma_closed_form.
    try {
      const Graph g = regular();
      const auto s = hmjoin::testing::random_subset(rng, g.order());
      const UniversalParams p0{hmjoin::testing::random_rational(rng, true), r(), r(), 0};
      const auto e0 = regular_gamma_closed_form(g, s, p0);
      o.expect(e0.which == ClosedFormCase::regular_delta_zero, "wrong case for delta = 0");
      o.expect(e0.value == gamma_bilinear(universal_matrix(g, p0), QMatrix(static_cast<std::size_t>(g.order()), 1, Rational(1)),
                                          [&] {
                                            QMatrix m(static_cast<std::size_t>(g.order()), 1);
                                            for (int v : s) m(static_cast<std::size_t>(v), 0) = 1;
                                            return m;
                                          }())
                                .matrix(0, 0),
               "delta = 0 closed form differs");
      ++seen[e0.which];

      const Graph h = hmjoin::testing::random_graph(rng, rng.uniform(1, 7));
      const Rational a = hmjoin::testing::random_rational(rng, true);
      const UniversalParams p1{a, r(), r(), -a};
      const auto left = hmjoin::testing::random_subset(rng, h.order());
      const auto e1 = regular_gamma_closed_form(h, left, all(h), p1);
      o.expect(e1.which == ClosedFormCase::right_full, "wrong case for right full");
      ++seen[e1.which];
      const auto e2 = regular_gamma_closed_form(h, all(h), left, p1);
      o.expect(e2.which == ClosedFormCase::left_full || e2.which == ClosedFormCase::right_full,
               "wrong case for left full");
      ++seen[e2.which];
    } catch (const Error& e) {
      o.fail(e.what());
    }
  }
  if (o.ok)
    o.detail = std::to_string(seen[ClosedFormCase::regular_delta_zero]) + " regular, " +
               std::to_string(seen[ClosedFormCase::right_full]) + " right-full, " +
               std::to_string(seen[ClosedFormCase::left_full]) + " left-full instances match";
  return o;
}

Outcome cospectral_suite() {
  Outcome o;
  std::size_t total = 0, non_iso = 0;
  for (auto kind : {CospectralKind::A, CospectralKind::S, CospectralKind::L, CospectralKind::U}) {
    for (const auto& c : search_pairs(default_catalog(), kind)) {
      ++total;
      if (c.isomorphic == false) ++non_iso;
      o.expect(reverify(c), "certificate of kind " + cospectral_kind_name(kind) + " fails re-verification");
      const auto p = kind_params(kind, SearchOptions{}.params);
      o.expect(charpoly(universal_matrix(c.first.graph(), p)) == charpoly(universal_matrix(c.second.graph(), p)),
               "assembled charpolys differ");
    }
  }
  const Graph star = make_named(Family::star, {4});
  const Graph c4k1 = disjoint_union({make_named(Family::cycle, {4}), Graph(1)});
  const Polynomial expected = poly({1, 0, -4, 0, 0, 0});
  o.expect(charpoly(star.adjacency_matrix()) == expected && charpoly(c4k1.adjacency_matrix()) == expected,
           "K_{1,4} and C_4 + K_1 not cospectral");
  o.expect(!isomorphism_test(star, c4k1), "K_{1,4} and C_4 + K_1 reported isomorphic");
  if (o.ok)
    o.detail = std::to_string(total) + " certificates re-verified (" + std::to_string(non_iso) +
               " non-isomorphic); K_{1,4} vs C_4 + K_1 cospectral, non-isomorphic";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"K_2, K_5 join over P_2: charpoly both ways", k2_k5},
      {"K_2, P_3, K_{1,3} join over P_3: charpoly and main functions", p3_three_factors},
      {"E-main classification", e_main},
      {"factorization identity on 200 random specs", identity_suite},
      {"carry-forward bounds on 200 random specs", carry_forward_suite},
      {"label reduction", reduction_suite},
      {"graph families", families_suite},
      {"universal matrices", universal_suite},
      {"closed-form main functions", closed_form_suite},
      {"cospectral certificates", cospectral_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
         << o.detail << "; " << seconds_since(t0) << " s]";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
