#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmjoin/graph.hpp"
#include "hmjoin/join.hpp"
#include "hmjoin/spectra.hpp"

namespace hmjoin {

/// H-generalized join: only the vertices of S_i ⊆ V(G_i) receive cross edges.
struct GeneralizedJoinSpec {
  Graph host;
  std::vector<Graph> factors;
  std::vector<std::vector<int>> subsets;
  UniversalParams params;

  std::size_t k() const { return factors.size(); }
  void validate() const;
  Graph graph() const;  // the join itself, factors concatenated in order
  friend bool operator==(const GeneralizedJoinSpec&, const GeneralizedJoinSpec&) = default;
};

// Relabels every factor so that S_i occupies the first |S_i| positions (in the
// order listed), the rest following in their old order. perms[i][v] is the new
// index of old vertex v.
struct SubsetsFirst {
  GeneralizedJoinSpec spec;
  std::vector<std::vector<int>> perms;
};
SubsetsFirst subsets_first(const GeneralizedJoinSpec& spec);

/// Rational stand-in for the √γ side matrix: U = (γ1, 1_S), V = (1, 1_S), so
/// U_i V_j^t = γ 1 1^t + 1_{S_i} 1_{S_j}^t for every γ.
struct AugmentedSideMatrices {
  QMatrix left;   // U_i
  QMatrix right;  // V_i
};
AugmentedSideMatrices augmented_side_matrices(int n, const std::vector<int>& subset, const Rational& gamma);

// U(G_i) + δ𝒟_i where 𝒟_i puts w_i on the vertices of S_i and 0 elsewhere.
QMatrix corrected_factor_matrix(const GeneralizedJoinSpec& spec, std::size_t i);

struct GeneralizedFactorization {
  GeneralizedJoinSpec working;          // subsets-first order
  std::vector<QMatrix> factor_matrices;  // U(G_i) + δ𝒟_i
  std::vector<Polynomial> factor_charpolys;
  std::vector<MainFunction> main_functions;  // 2 × 2, columns (1, 1_S) against (γ1, 1_S)
  Polynomial phi;
  Polynomial charpoly;
};

// Block determinant with 2 × 2 main-function blocks; throws InvariantViolation
// when it disagrees with the charpoly of the assembled U(G).
GeneralizedFactorization generalized_universal_factorization(const GeneralizedJoinSpec& spec);
Polynomial generalized_universal_charpoly(const GeneralizedJoinSpec& spec);

enum class ClosedFormCase { regular_delta_zero, right_full, left_full };

struct ClosedFormEntry {
  ClosedFormCase which;
  RationalFunction value;
};

// 1_left^t (λI − U(G))^{-1} 1_right for the three situations with a closed form:
//   regular_delta_zero: G r-regular, δ = 0, one side full  → |other| / (λ − (αr + β + γn))
//   right_full:         α = −δ, right = V(G)               → |left|  / (λ − (β + γn))
//   left_full:          α = −δ, left = V(G)                → |right| / (λ − (β + γn))
// Throws HypothesisNotMet otherwise, InvariantViolation if the closed form
// disagrees with the main function computed from the resolvent.
ClosedFormEntry regular_gamma_closed_form(const Graph& g, const std::vector<int>& left, const std::vector<int>& right,
                                          const UniversalParams& p);
// 1_S^t (λI − U(G))^{-1} 1_n.
ClosedFormEntry regular_gamma_closed_form(const Graph& g, const std::vector<int>& s, const UniversalParams& p);

std::string closed_form_case_name(ClosedFormCase c);

// Exact isomorphism test by colour refinement with individualization; throws
// TooLarge beyond 32 vertices.
bool isomorphism_test(const Graph& a, const Graph& b);
inline constexpr int kIsomorphismLimit = 32;

enum class CospectralKind { A, S, L, U };
CospectralKind cospectral_kind_from_name(const std::string& name);
std::string cospectral_kind_name(CospectralKind kind);
// The matrix each kind compares; U keeps the parameters it is given.
UniversalParams kind_params(CospectralKind kind, const UniversalParams& u);

struct CospectralCertificate {
  GeneralizedJoinSpec first;
  GeneralizedJoinSpec second;
  CospectralKind kind = CospectralKind::A;
  Polynomial charpoly_first;
  Polynomial charpoly_second;
  std::optional<bool> isomorphic;  // empty when the joins exceed the isomorphism limit
  // Per factor, the matched main functions of the first and second join.
  std::vector<MainFunction> gamma_first;
  std::vector<MainFunction> gamma_second;

  bool cospectral() const { return charpoly_first == charpoly_second; }
};

// Checks the hypotheses for `kind`, builds both joins and compares the
// charpolys of their assembled matrices. Beyond the stated hypotheses, kinds L
// and U also require equal φ and equal 2 × 2 main functions of the blocks
// U(G_i) + δ𝒟_i, since the stated ones do not control those blocks once
// S_i ≠ V(G_i). Throws HypothesisNotMet naming the first failed condition and
// InvariantViolation if the hypotheses hold but the charpolys differ.
CospectralCertificate check_cospectral_conditions(const GeneralizedJoinSpec& a, const GeneralizedJoinSpec& b,
                                                  CospectralKind kind);

// Re-derives both charpolys from the assembled matrices.
bool reverify(const CospectralCertificate& c);

struct SearchOptions {
  int subset_budget = 512;   // subsets tried per catalog graph, smallest first
  int group_limit = 24;      // partners examined per matching group
  UniversalParams params = UniversalParams::signless_laplacian();  // used by kind U
};

// Joins every (G, S) candidate to a single pendant partner vertex over host K_2
// and pairs candidates whose per-factor hypotheses match. Only exactly verified
// certificates are returned, one per distinct charpoly pair, preferring
// non-isomorphic witnesses, sorted canonically.
std::vector<CospectralCertificate> search_pairs(const std::vector<Graph>& catalog, CospectralKind kind,
                                                const SearchOptions& options = {});

// Small graphs shipped for searches: K_{1,4}, C_4 ⊔ K_1, C_6, 2C_3, K_{3,3},
// the prism C_3 □ K_2, the cube and the Petersen graph.
std::vector<Graph> default_catalog();

}  // namespace hmjoin
