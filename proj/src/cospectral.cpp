#include "hmjoin/cospectral.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "hmjoin/errors.hpp"

namespace hmjoin {

namespace {

QMatrix indicator(int n, const std::vector<int>& subset) {
  QMatrix v(static_cast<std::size_t>(n), 1);
  for (int s : subset) v(static_cast<std::size_t>(s), 0) = 1;
  return v;
}

bool is_full(const Graph& g, const std::vector<int>& s) {
  return static_cast<int>(std::set<int>(s.begin(), s.end()).size()) == g.order();
}

void check_subset(const Graph& g, const std::vector<int>& s, const std::string& where) {
  std::set<int> seen;
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw InvalidParameters(where + ": vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) throw InvalidParameters(where + ": vertex " + std::to_string(v) + " repeated");
  }
}

std::vector<int> host_weights(const GeneralizedJoinSpec& spec) {
  std::vector<int> w(spec.k(), 0);
  for (auto [i, j] : spec.host.edges()) {
    w[static_cast<std::size_t>(i)] += static_cast<int>(spec.subsets[static_cast<std::size_t>(j)].size());
    w[static_cast<std::size_t>(j)] += static_cast<int>(spec.subsets[static_cast<std::size_t>(i)].size());
  }
  return w;
}

}  // namespace

void GeneralizedJoinSpec::validate() const {
  if (factors.empty()) throw InvalidParameters("generalized join needs at least one factor");
  if (host.order() != static_cast<int>(factors.size()))
    throw InvalidParameters("host has " + std::to_string(host.order()) + " vertices but there are " +
                            std::to_string(factors.size()) + " factors");
  if (subsets.size() != factors.size()) throw InvalidParameters("need one vertex subset per factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].order() == 0) throw InvalidParameters("factor " + std::to_string(i) + " has no vertices");
    check_subset(factors[i], subsets[i], "subset " + std::to_string(i));
  }
  params.validate();
}

Graph GeneralizedJoinSpec::graph() const {
  validate();
  return generalized_join(host, factors, subsets);
}

SubsetsFirst subsets_first(const GeneralizedJoinSpec& spec) {
  spec.validate();
  SubsetsFirst out;
  out.spec = spec;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    const int n = spec.factors[i].order();
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : spec.subsets[i]) perm[static_cast<std::size_t>(v)] = next++;
    for (int v = 0; v < n; ++v)
      if (perm[static_cast<std::size_t>(v)] < 0) perm[static_cast<std::size_t>(v)] = next++;
    out.spec.factors[i] = spec.factors[i].relabeled(perm);
    std::vector<int> s(spec.subsets[i].size());
    std::iota(s.begin(), s.end(), 0);
    out.spec.subsets[i] = std::move(s);
    out.perms.push_back(std::move(perm));
  }
  return out;
}

AugmentedSideMatrices augmented_side_matrices(int n, const std::vector<int>& subset, const Rational& gamma) {
  AugmentedSideMatrices out{QMatrix(static_cast<std::size_t>(n), 2), QMatrix(static_cast<std::size_t>(n), 2)};
  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    out.left(s, 0) = gamma;
    out.right(s, 0) = 1;
  }
  for (int v : subset) {
    out.left(static_cast<std::size_t>(v), 1) = 1;
    out.right(static_cast<std::size_t>(v), 1) = 1;
  }
  return out;
}

QMatrix corrected_factor_matrix(const GeneralizedJoinSpec& spec, std::size_t i) {
  const auto w = host_weights(spec);
  QMatrix m = universal_matrix(spec.factors[i], spec.params);
  for (int v : spec.subsets[i]) m(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) += spec.params.delta * w[i];
  return m;
}

GeneralizedFactorization generalized_universal_factorization(const GeneralizedJoinSpec& spec) {
  spec.validate();
  GeneralizedFactorization out;
  out.working = subsets_first(spec).spec;
  const auto& ws = out.working;
  const auto& p = ws.params;

  BlockSystem system;
  system.coupling.assign(ws.k(), std::vector<QMatrix>(ws.k()));
  for (std::size_t i = 0; i < ws.k(); ++i) {
    system.diagonal.push_back(corrected_factor_matrix(ws, i));
    auto side = augmented_side_matrices(ws.factors[i].order(), ws.subsets[i], p.gamma);
    system.left.push_back(std::move(side.left));
    system.right.push_back(std::move(side.right));
    for (std::size_t j = 0; j < ws.k(); ++j) {
      if (i == j) continue;
      QMatrix c(2, 2);
      c(0, 0) = 1;
      c(1, 1) = ws.host.has_edge(static_cast<int>(i), static_cast<int>(j)) ? p.alpha : Rational(0);
      system.coupling[i][j] = std::move(c);
    }
  }
  const QMatrix direct = universal_matrix(ws.graph(), p);
  if (system.assemble() != direct)
    throw InvariantViolation("block assembly differs from the universal matrix of the generalized join");

  auto fact = block_factorization(system);
  out.factor_matrices = system.diagonal;
  for (const auto& r : fact.resolvents) out.factor_charpolys.push_back(r.charpoly);
  out.main_functions = std::move(fact.main_functions);
  out.phi = std::move(fact.phi);
  out.charpoly = std::move(fact.charpoly);

  // Oracle in the caller's vertex order, through the H_m-join realization.
  const Graph realized = hm_join(generalized_to_hm(spec.host, spec.factors, spec.subsets));
  if (realized != spec.graph()) throw InvariantViolation("H_{k+1}-join realization differs from the generalized join");
  const Polynomial oracle = charpoly(universal_matrix(realized, p));
  if (oracle != out.charpoly)
    throw InvariantViolation("charpoly_direct (" + to_string(oracle) + ") != charpoly_block (" +
                             to_string(out.charpoly) + ")");
  return out;
}

Polynomial generalized_universal_charpoly(const GeneralizedJoinSpec& spec) {
  return generalized_universal_factorization(spec).charpoly;
}

std::string closed_form_case_name(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::regular_delta_zero: return "regular-delta-zero";
    case ClosedFormCase::right_full: return "right-full";
    case ClosedFormCase::left_full: return "left-full";
  }
  return "?";
}

ClosedFormEntry regular_gamma_closed_form(const Graph& g, const std::vector<int>& left, const std::vector<int>& right,
                                          const UniversalParams& p) {
  p.validate();
  check_subset(g, left, "left subset");
  check_subset(g, right, "right subset");
  const int n = g.order();
  const auto size = [](const std::vector<int>& s) { return Rational(static_cast<long>(s.size())); };

  ClosedFormEntry out{ClosedFormCase::right_full, {}};
  if (p.alpha == -p.delta && is_full(g, right)) {
    out = {ClosedFormCase::right_full, RationalFunction(size(left), Polynomial::linear(p.beta + p.gamma * n))};
  } else if (p.alpha == -p.delta && is_full(g, left)) {
    out = {ClosedFormCase::left_full, RationalFunction(size(right), Polynomial::linear(p.beta + p.gamma * n))};
  } else if (p.delta == 0 && g.is_regular() && (is_full(g, left) || is_full(g, right))) {
    const int r = n == 0 ? 0 : g.degree(0);
    const auto& other = is_full(g, right) ? left : right;
    out = {ClosedFormCase::regular_delta_zero,
           RationalFunction(size(other), Polynomial::linear(p.alpha * r + p.beta + p.gamma * n))};
  } else {
    throw HypothesisNotMet(
        "no closed form: need (G regular, delta = 0, one side full) or (alpha = -delta, one side full)");
  }

  const auto mf = gamma_bilinear(universal_matrix(g, p), indicator(n, right), indicator(n, left));
  if (!(mf.matrix(0, 0) == out.value))
    throw InvariantViolation("closed form " + to_string(out.value) + " != main function " + to_string(mf.matrix(0, 0)));
  return out;
}

ClosedFormEntry regular_gamma_closed_form(const Graph& g, const std::vector<int>& s, const UniversalParams& p) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return regular_gamma_closed_form(g, s, all, p);
}

namespace {

// Joint colour refinement on a ⊔ b; colours are canonical across both graphs.
class Refiner {
 public:
  Refiner(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {
    for (int v = 0; v < n_; ++v) {
      na_.push_back(a.neighbors(v));
      nb_.push_back(b.neighbors(v));
    }
  }

  bool search(std::vector<int> colors) const {
    refine(colors);
    if (!balanced(colors)) return false;
    // Smallest non-singleton class, by size then colour.
    std::map<int, int> size;
    for (int v = 0; v < n_; ++v) ++size[colors[static_cast<std::size_t>(v)]];
    int target = -1, best = n_ + 1;
    for (auto [c, s] : size)
      if (s > 1 && s < best) best = s, target = c;
    if (target < 0) return discrete_match(colors);

    int u = 0;
    while (colors[static_cast<std::size_t>(u)] != target) ++u;
    const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(n_ + v)] != target) continue;
      auto next = colors;
      next[static_cast<std::size_t>(u)] = fresh;
      next[static_cast<std::size_t>(n_ + v)] = fresh;
      if (search(std::move(next))) return true;
    }
    return false;
  }

  int order() const { return n_; }

 private:
  const std::vector<int>& nbrs(int x) const {
    return x < n_ ? na_[static_cast<std::size_t>(x)] : nb_[static_cast<std::size_t>(x - n_)];
  }

  void refine(std::vector<int>& colors) const {
    auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    std::size_t count = classes(colors);
    for (;;) {
      std::map<std::pair<int, std::vector<int>>, int> ids;
      std::vector<std::pair<int, std::vector<int>>> sig(colors.size());
      for (int x = 0; x < 2 * n_; ++x) {
        std::vector<int> around;
        const int base = x < n_ ? 0 : n_;
        for (int y : nbrs(x)) around.push_back(colors[static_cast<std::size_t>(base + y)]);
        std::sort(around.begin(), around.end());
        sig[static_cast<std::size_t>(x)] = {colors[static_cast<std::size_t>(x)], std::move(around)};
        ids.emplace(sig[static_cast<std::size_t>(x)], 0);
      }
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (std::size_t x = 0; x < colors.size(); ++x) colors[x] = ids.at(sig[x]);
      const std::size_t now = ids.size();
      if (now == count) return;
      count = now;
    }
  }

  bool balanced(const std::vector<int>& colors) const {
    std::map<int, int> hist;
    for (int v = 0; v < n_; ++v) {
      ++hist[colors[static_cast<std::size_t>(v)]];
      --hist[colors[static_cast<std::size_t>(n_ + v)]];
    }
    return std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool discrete_match(const std::vector<int>& colors) const {
    std::map<int, int> where_b;
    for (int v = 0; v < n_; ++v) where_b[colors[static_cast<std::size_t>(n_ + v)]] = v;
    std::vector<int> map(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) map[static_cast<std::size_t>(v)] = where_b.at(colors[static_cast<std::size_t>(v)]);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (a_.has_edge(u, v) != b_.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
          return false;
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<std::vector<int>> na_, nb_;
};

}  // namespace

bool isomorphism_test(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit)
    throw TooLarge("isomorphism test is limited to " + std::to_string(kIsomorphismLimit) + " vertices");
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.order() == 0) return true;
  Refiner r(a, b);
  return r.search(std::vector<int>(static_cast<std::size_t>(2 * a.order()), 0));
}

CospectralKind cospectral_kind_from_name(const std::string& name) {
  if (name == "A") return CospectralKind::A;
  if (name == "S" || name == "seidel") return CospectralKind::S;
  if (name == "L") return CospectralKind::L;
  if (name == "U") return CospectralKind::U;
  throw InvalidParameters("unknown cospectral kind '" + name + "' (A, S, L, U)");
}

std::string cospectral_kind_name(CospectralKind kind) {
  switch (kind) {
    case CospectralKind::A: return "A";
    case CospectralKind::S: return "S";
    case CospectralKind::L: return "L";
    case CospectralKind::U: return "U";
  }
  return "?";
}

UniversalParams kind_params(CospectralKind kind, const UniversalParams& u) {
  switch (kind) {
    case CospectralKind::A: return UniversalParams::adjacency();
    case CospectralKind::S: return UniversalParams::seidel();
    case CospectralKind::L: return UniversalParams::laplacian();
    case CospectralKind::U: return u;
  }
  return u;
}

namespace {

std::string factor_name(std::size_t i) { return "factor " + std::to_string(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisNotMet(what);
}

RationalFunction subset_gamma(const Graph& g, const std::vector<int>& s, const UniversalParams& p) {
  const QMatrix e = indicator(g.order(), s);
  return gamma_bilinear(universal_matrix(g, p), e, e).matrix(0, 0);
}

}  // namespace

CospectralCertificate check_cospectral_conditions(const GeneralizedJoinSpec& a_in, const GeneralizedJoinSpec& b_in,
                                                  CospectralKind kind) {
  if (kind == CospectralKind::U)
    require(a_in.params == b_in.params, "both joins must use the same universal parameters");
  GeneralizedJoinSpec a = a_in, b = b_in;
  a.params = b.params = kind_params(kind, a_in.params);
  a.validate();
  b.validate();
  require(a.host == b.host, "host graphs differ");
  require(a.k() == b.k(), "factor counts differ");
  const auto& p = a.params;

  for (std::size_t i = 0; i < a.k(); ++i) {
    const auto& g = a.factors[i];
    const auto& h = b.factors[i];
    const auto where = factor_name(i);
    require(g.order() == h.order(), where + ": orders differ");
    require(a.subsets[i].size() == b.subsets[i].size(), where + ": subset sizes differ");
    if (kind == CospectralKind::A || kind == CospectralKind::S) {
      require(g.is_regular() && h.is_regular(), where + ": factors must be regular");
      require(g.degree(0) == h.degree(0), where + ": factors have different degrees");
    }
    require(charpoly(universal_matrix(g, p)) == charpoly(universal_matrix(h, p)),
            where + ": factors are not " + cospectral_kind_name(kind) + "-cospectral");
    if (kind != CospectralKind::U)
      require(subset_gamma(g, a.subsets[i], p) == subset_gamma(h, b.subsets[i], p),
              where + ": main functions of the subsets differ");
  }

  auto fa = generalized_universal_factorization(a);
  auto fb = generalized_universal_factorization(b);
  if (kind == CospectralKind::L || kind == CospectralKind::U) {
    for (std::size_t i = 0; i < a.k(); ++i) {
      const auto where = factor_name(i);
      require(fa.factor_charpolys[i] == fb.factor_charpolys[i],
              where + ": degree-corrected factor blocks are not cospectral");
      require(fa.main_functions[i].matrix == fb.main_functions[i].matrix,
              where + ": 2x2 main functions of the degree-corrected blocks differ");
    }
  }

  CospectralCertificate c;
  c.first = a;
  c.second = b;
  c.kind = kind;
  const Graph ga = a.graph();
  const Graph gb = b.graph();
  c.charpoly_first = charpoly(universal_matrix(ga, p));
  c.charpoly_second = charpoly(universal_matrix(gb, p));
  c.gamma_first = std::move(fa.main_functions);
  c.gamma_second = std::move(fb.main_functions);
  if (!c.cospectral())
    throw InvariantViolation("hypotheses hold but the " + cospectral_kind_name(kind) + "-charpolys differ: " +
                             to_string(c.charpoly_first) + " vs " + to_string(c.charpoly_second));
  try {
    c.isomorphic = isomorphism_test(ga, gb);
  } catch (const TooLarge&) {
    c.isomorphic.reset();
  }
  return c;
}

bool reverify(const CospectralCertificate& c) {
  const auto p = c.first.params;
  const Polynomial x = charpoly(universal_matrix(c.first.graph(), p));
  const Polynomial y = charpoly(universal_matrix(c.second.graph(), c.second.params));
  return x == y && x == c.charpoly_first && y == c.charpoly_second;
}

namespace {

struct Candidate {
  std::size_t graph = 0;
  std::vector<int> subset;
};

std::vector<std::vector<int>> subsets_by_size(int n, int budget) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= n && static_cast<int>(out.size()) < budget; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      out.push_back(pick);
      if (static_cast<int>(out.size()) >= budget) break;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

GeneralizedJoinSpec pendant_join(const Graph& g, const std::vector<int>& s, const UniversalParams& p) {
  GeneralizedJoinSpec spec;
  spec.host = make_named(Family::complete, {2});
  spec.factors = {g, Graph(1)};
  spec.subsets = {s, {0}};
  spec.params = p;
  return spec;
}

std::string matrix_key(const RatFunMatrix& m) {
  std::string out;
  for (const auto& e : m.data()) out += to_string(e) + ";";
  return out;
}

// Everything the per-factor hypotheses compare, flattened into a string.
std::string candidate_key(const Graph& g, const std::vector<int>& s, CospectralKind kind, const UniversalParams& p,
                          const Polynomial& plain_charpoly) {
  std::string key = std::to_string(g.order()) + "|" + std::to_string(s.size()) + "|" + to_string(plain_charpoly) + "|";
  if (kind == CospectralKind::A || kind == CospectralKind::S) {
    key += std::to_string(g.degree(0)) + "|" + to_string(subset_gamma(g, s, p));
    return key;
  }
  if (kind == CospectralKind::L) key += to_string(subset_gamma(g, s, p)) + "|";
  auto spec = pendant_join(g, s, p);
  QMatrix m = corrected_factor_matrix(spec, 0);
  auto side = augmented_side_matrices(g.order(), s, p.gamma);
  auto resolvent = charpoly_with_adjugate(m);
  key += to_string(resolvent.charpoly) + "|" + matrix_key(gamma_bilinear(resolvent, side.left, side.right).matrix);
  return key;
}

std::string spec_key(const GeneralizedJoinSpec& s) {
  std::string out;
  for (std::size_t i = 0; i < s.k(); ++i) {
    for (auto [u, v] : s.factors[i].edges()) out += std::to_string(u) + "-" + std::to_string(v) + ",";
    out += "/";
    for (int v : s.subsets[i]) out += std::to_string(v) + ",";
    out += ";";
  }
  return out;
}

}  // namespace

std::vector<CospectralCertificate> search_pairs(const std::vector<Graph>& catalog, CospectralKind kind,
                                                const SearchOptions& options) {
  const UniversalParams p = kind_params(kind, options.params);
  p.validate();
  std::map<std::string, std::vector<Candidate>> groups;
  for (std::size_t gi = 0; gi < catalog.size(); ++gi) {
    const Graph& g = catalog[gi];
    if (g.order() < 1) continue;
    if ((kind == CospectralKind::A || kind == CospectralKind::S) && !g.is_regular()) continue;
    const Polynomial plain = charpoly(universal_matrix(g, p));
    for (auto& s : subsets_by_size(g.order(), options.subset_budget))
      groups[candidate_key(g, s, kind, p, plain)].push_back({gi, std::move(s)});
  }

  std::vector<const std::vector<Candidate>*> work;
  for (const auto& [key, members] : groups)
    if (members.size() > 1) work.push_back(&members);

  std::vector<std::optional<CospectralCertificate>> found(work.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t w = cursor++; w < work.size(); w = cursor++) {
      const auto& members = *work[w];
      const auto& base = members.front();
      auto first = pendant_join(catalog[base.graph], base.subset, p);
      const std::size_t limit = std::min(members.size(), static_cast<std::size_t>(options.group_limit) + 1);
      for (std::size_t t = 1; t < limit; ++t) {
        auto second = pendant_join(catalog[members[t].graph], members[t].subset, p);
        try {
          auto cert = check_cospectral_conditions(first, second, kind);
          if (!reverify(cert)) continue;
          const bool distinct = cert.isomorphic.has_value() && !*cert.isomorphic;
          if (!found[w] || distinct) found[w] = std::move(cert);
          if (distinct) break;
        } catch (const HypothesisNotMet&) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned threads = std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(work.size())));
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // One certificate per charpoly, preferring a non-isomorphic witness.
  auto score = [](const CospectralCertificate& c) { return c.isomorphic.has_value() && !*c.isomorphic ? 0 : 1; };
  std::map<std::string, CospectralCertificate> best;
  for (auto& f : found) {
    if (!f) continue;
    const auto key = to_string(f->charpoly_first);
    auto it = best.find(key);
    if (it == best.end()) best.emplace(key, std::move(*f));
    else if (score(*f) < score(it->second)) it->second = std::move(*f);
  }
  std::vector<CospectralCertificate> out;
  for (auto& [key, c] : best) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(to_string(x.charpoly_first), spec_key(x.first) + spec_key(x.second)) <
           std::pair(to_string(y.charpoly_first), spec_key(y.first) + spec_key(y.second));
  });
  return out;
}

std::vector<Graph> default_catalog() {
  const Graph k1 = Graph(1);
  const Graph c4 = make_named(Family::cycle, {4});
  const Graph c3 = make_named(Family::cycle, {3});
  Graph petersen(10);
  {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
      b.add_edge(i, (i + 1) % 5);
      b.add_edge(i, 5 + i);
      b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    petersen = std::move(b).build();
  }
  Graph prism(6), cube(8);
  {
    // Box products written out to keep the catalog free of family machinery.
    GraphBuilder b(6);
    for (int i = 0; i < 3; ++i) {
      b.add_edge(i, (i + 1) % 3);
      b.add_edge(3 + i, 3 + (i + 1) % 3);
      b.add_edge(i, 3 + i);
    }
    prism = std::move(b).build();
    GraphBuilder q(8);
    for (int u = 0; u < 8; ++u)
      for (int bit = 0; bit < 3; ++bit)
        if (u < (u ^ (1 << bit))) q.add_edge(u, u ^ (1 << bit));
    cube = std::move(q).build();
  }
  return {make_named(Family::star, {4}),
          disjoint_union({c4, k1}),
          make_named(Family::cycle, {6}),
          disjoint_union({c3, c3}),
          make_named(Family::complete_bipartite, {3, 3}),
          prism,
          cube,
          petersen};
}

}  // namespace hmjoin
