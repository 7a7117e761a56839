#pragma once

#include <vector>

#include "hmjoin/matrix.hpp"
#include "hmjoin/polynomial.hpp"
#include "hmjoin/rational_function.hpp"

namespace hmjoin {

// Exact determinant: rows are scaled to integers and reduced with
// fraction-free Bareiss elimination.
Rational determinant(const QMatrix& m);

/// φ(λ) = det(λI − M) together with the coefficient matrices of
/// adj(λI − M) = Σ_k λ^(n−1−k) B_k, from one Faddeev–LeVerrier sweep.
struct CharpolyAdjugate {
  Polynomial charpoly;
  std::vector<QMatrix> adjugate_coeffs;  // B_0 .. B_{n-1}; B_0 = I

  // adj(λI − M) as a polynomial matrix.
  PolyMatrix adjugate() const;
};

CharpolyAdjugate charpoly_with_adjugate(const QMatrix& m);

// det(λI − M) by Hessenberg reduction; O(n^3) and independent of the
// Faddeev–LeVerrier path.
Polynomial charpoly(const QMatrix& m);

// Exact determinant of a polynomial matrix by evaluation at the integer points
// 0..degree_bound followed by Newton interpolation.
Polynomial polymatrix_det(const PolyMatrix& m, int degree_bound);

// Exact determinant by cofactor expansion; exponential, meant for small test
// oracles.
Polynomial cofactor_det(const PolyMatrix& m);

// Interpolating polynomial of degree < xs.size() through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Worker count for internal parallel loops: HMJOIN_THREADS if set, else the
// hardware concurrency.
unsigned worker_threads();

}  // namespace hmjoin
