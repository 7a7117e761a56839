#pragma once

#include <optional>
#include <vector>

#include "hmjoin/graph.hpp"
#include "hmjoin/join.hpp"
#include "hmjoin/linalg.hpp"
#include "hmjoin/rational_function.hpp"

namespace hmjoin {

/// Γ = V^t (λI − M)^{-1} U, kept both as reduced rational functions and as
/// f / g with g the monic lcm of the entry denominators.
struct MainFunction {
  RatFunMatrix matrix;
  Polynomial denominator;  // g
  PolyMatrix numerator;    // f = g Γ
};

MainFunction gamma_bilinear(const CharpolyAdjugate& resolvent, const QMatrix& u, const QMatrix& v);
MainFunction gamma_bilinear(const QMatrix& m, const QMatrix& u, const QMatrix& v);
MainFunction gamma(const QMatrix& m, const QMatrix& e);

/// A set of eigenvalues of M treated as one unit: a single rational eigenvalue,
/// or the roots of a square-free factor of φ_M whose roots share a multiplicity
/// and an E-main status.
struct EigenClass {
  Polynomial defining;            // monic, square-free; linear iff `value` is set
  std::optional<Rational> value;  // the eigenvalue when rational
  int multiplicity = 0;           // multiplicity of each root in φ_M
  bool e_main = false;

  friend bool operator==(const EigenClass&, const EigenClass&) = default;
};

// Splits the roots of φ into classes and flags each root as E-main iff it is a
// root of g (the reduced denominator of Γ_M(E)). `m` is only used to locate
// rational eigenvalues numerically.
std::vector<EigenClass> eigen_classes(const QMatrix& m, const Polynomial& phi, const Polynomial& g);

// Requires a symmetric M.
std::vector<EigenClass> classify_e_main(const QMatrix& m, const QMatrix& e);

struct NumericEigenvalue {
  double value = 0;
  int multiplicity = 0;
};

// Symmetric eigensolve in double precision, clustered at 1e-8 relative
// tolerance. Diagnostic only.
std::vector<NumericEigenvalue> numeric_spectrum(const QMatrix& m);

// Rational eigenvalues of a symmetric matrix, located numerically and then
// confirmed exactly against φ.
std::vector<Rational> rational_eigenvalues(const QMatrix& m, const Polynomial& phi);

// Independent E-main test through numeric eigenprojections: ‖π_θ E‖ > tol.
bool numeric_is_e_main(const QMatrix& m, const QMatrix& e, double eigenvalue, double tol = 1e-9);

/// Block matrix with diagonal blocks M_i and off-diagonal blocks U_i C_ij V_j^t.
struct BlockSystem {
  std::vector<QMatrix> diagonal;
  std::vector<QMatrix> left;                   // U_i, n_i × p
  std::vector<QMatrix> right;                  // V_i, n_i × p
  std::vector<std::vector<QMatrix>> coupling;  // C_ij, p × p (diagonal entries unused)

  std::size_t k() const { return diagonal.size(); }
  std::size_t width() const;  // p
  void validate() const;
  QMatrix assemble() const;
};

struct BlockFactorization {
  std::vector<CharpolyAdjugate> resolvents;  // φ_i with adj(λI − M_i)
  std::vector<MainFunction> main_functions;  // Γ_i = V_i^t (λI − M_i)^{-1} U_i
  Polynomial phi;                            // Φ: det with g_i I_p and −f_i C_ij blocks
  Polynomial charpoly;                       // Π φ_i · Φ / Π g_i^p
};

// det(λI − M) = Π φ_i · det(I − [Γ_i C_ij]); the determinant is cleared of
// denominators block row by block row and the Π g_i^p is divided out exactly.
BlockFactorization block_factorization(const BlockSystem& system);

struct LedgerRow {
  std::size_t factor = 0;
  EigenClass eigen_class;
  int guaranteed = 0;
  int observed = 0;
  // Per-root multiplicity recovered from the numeric spectrum; -1 if the
  // roots could not be matched.
  int observed_numeric = -1;
};

// One row per rational eigenvalue shared by several factors: the per-factor
// guarantees add up because they come from vectors with disjoint supports.
struct CombinedRow {
  Rational value;
  int guaranteed = 0;
  int observed = 0;
};

struct SpectralReport {
  UniversalParams params;
  int m = 1;
  Polynomial charpoly_direct;
  Polynomial charpoly_block;
  std::vector<Polynomial> factor_charpolys;
  std::vector<QMatrix> factor_matrices;  // the M_i whose spectra carry forward
  std::vector<MainFunction> main_functions;
  Polynomial phi_polynomial;
  std::vector<std::vector<EigenClass>> e_main_flags;
  std::vector<LedgerRow> carry_forward;
  std::vector<CombinedRow> combined;
  std::vector<NumericEigenvalue> numeric_spectrum;

  // Σ p deg g_i, the bound handed to the determinant interpolation.
  int phi_degree_bound() const;
};

// Adjacency spectrum of an H_m-join through the block factorization, checked
// against the charpoly of the assembled adjacency matrix. Throws
// InvariantViolation when any exact identity fails.
SpectralReport block_charpoly(const JoinSpec& spec);

// Same for αA + βI + δD (γ must be 0): factors carry U(G_i) + δ𝒟_i and the
// cross blocks carry α.
SpectralReport universal_block_charpoly(const JoinSpec& spec, const UniversalParams& p);

std::vector<LedgerRow> carry_forward_report(const JoinSpec& spec);

/// p = c · Π (λ − r)^e · Π q^e with the q free of rational roots.
struct Factored {
  Rational constant;
  std::vector<std::pair<Rational, int>> linear;      // ascending roots
  std::vector<std::pair<Polynomial, int>> residual;  // square-free parts, by multiplicity
};

// Rational roots are located on the square-free part numerically and confirmed
// exactly, so the result is exact. The zero polynomial is rejected.
Factored factor_rational_roots(const Polynomial& p);

// "(λ - 5)(λ - 1)(λ + 1)^4(λ + 2)" style rendering of factor_rational_roots.
std::string to_factored_string(const Polynomial& p, const std::string& var = "λ");

}  // namespace hmjoin
