#pragma once

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hmjoin/cospectral.hpp"
#include "hmjoin/graph.hpp"
#include "hmjoin/io.hpp"
#include "hmjoin/join.hpp"

namespace hmjoin::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline Graph random_graph(Rng& rng, int n, double p = 0.5) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(p)) b.add_edge(u, v);
  return std::move(b).build();
}

inline JoinSpec random_spec(Rng& rng, int kmax = 4, int nmax = 6, int mmax = 4) {
  JoinSpec s;
  const int k = rng.uniform(1, kmax);
  s.m = rng.uniform(1, mmax);
  s.host = random_graph(rng, k, 0.6);
  for (int i = 0; i < k; ++i) {
    const int n = rng.uniform(1, nmax);
    s.factors.push_back(random_graph(rng, n, rng.uniform(1, 9) / 10.0));
    IndexingMap im{s.m, {}};
    for (int v = 0; v < n; ++v) im.labels.push_back(rng.uniform(1, s.m));
    s.indexing.push_back(std::move(im));
  }
  return s;
}

inline Rational random_rational(Rng& rng, bool nonzero = false) {
  for (;;) {
    Rational r(rng.uniform(-6, 6), rng.uniform(1, 4));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

inline std::vector<int> random_subset(Rng& rng, int n) {
  std::vector<int> s;
  for (int v = 0; v < n; ++v)
    if (rng.coin()) s.push_back(v);
  std::shuffle(s.begin(), s.end(), rng.engine());
  return s;
}

inline GeneralizedJoinSpec random_generalized(Rng& rng, int kmax = 3, int nmax = 5) {
  GeneralizedJoinSpec s;
  const int k = rng.uniform(1, kmax);
  s.host = random_graph(rng, k, 0.6);
  for (int i = 0; i < k; ++i) {
    const int n = rng.uniform(1, nmax);
    s.factors.push_back(random_graph(rng, n));
    s.subsets.push_back(random_subset(rng, n));
  }
  s.params = {random_rational(rng, true), random_rational(rng), random_rational(rng), random_rational(rng)};
  return s;
}

inline Polynomial poly(std::initializer_list<long> coeffs_high_to_low) {
  std::vector<Rational> c;
  for (long x : coeffs_high_to_low) c.insert(c.begin(), Rational(x));
  return Polynomial(std::move(c));
}

inline std::string fixture(const std::string& name) { return std::string(HMJOIN_FIXTURES) + "/" + name; }

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(fixture(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline JoinSpec load_join(const std::string& name) {
  return std::get<JoinSpec>(parse_spec(parse_json_text(fixture_text(name))));
}

inline GeneralizedJoinSpec load_generalized(const std::string& name) {
  return std::get<GeneralizedJoinSpec>(parse_spec(parse_json_text(fixture_text(name))));
}

// Reduced (num / den) from coefficient lists, highest degree first.
inline RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalFunction(poly(num), poly(den));
}

}  // namespace hmjoin::testing

namespace doctest {
template <>
struct StringMaker<hmjoin::Polynomial> {
  static String convert(const hmjoin::Polynomial& p) { return hmjoin::to_string(p).c_str(); }
};
template <>
struct StringMaker<hmjoin::RationalFunction> {
  static String convert(const hmjoin::RationalFunction& f) { return hmjoin::to_string(f).c_str(); }
};
}  // namespace doctest
