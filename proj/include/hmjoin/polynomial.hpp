#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hmjoin/rational.hpp"

namespace hmjoin {

/// Dense univariate polynomial over the rationals, coefficients stored lowest
/// degree first and always trimmed (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  // The indeterminate λ.
  static Polynomial x();
  // (λ - r)
  static Polynomial linear(const Rational& root);
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& leading() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  // p(λ + s)
  Polynomial shifted(const Rational& s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Lexicographic order on (degree, coefficients from the top); used only for
  // canonical sorting of report rows.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

// Quotient of a by b; throws InexactDivision when b does not divide a.
Polynomial poly_divexact(const Polynomial& a, const Polynomial& b);

bool divides(const Polynomial& d, const Polynomial& p);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
Polynomial pow(Polynomial base, int exponent);

// Largest e with (λ - r)^e | p. The zero polynomial is rejected.
int rational_root_multiplicity(const Polynomial& p, const Rational& r);

// Largest e with f^e | p, for non-constant f and nonzero p.
int factor_multiplicity(const Polynomial& p, const Polynomial& f);

// Yun's algorithm: monic p = Π s_j^j with s_j square-free and pairwise
// coprime. Only the non-constant s_j are returned, as (s_j, j).
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

Polynomial square_free_part(const Polynomial& p);

// Human-readable form such as "λ^3 - 2λ".
std::string to_string(const Polynomial& p, const std::string& var = "λ");

}  // namespace hmjoin
