#pragma once

#include <string>

#include "hmjoin/matrix.hpp"
#include "hmjoin/polynomial.hpp"

namespace hmjoin {

/// Element of Q(λ), always stored reduced with a monic denominator; the sign
/// lives in the numerator. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : RationalFunction(Polynomial(c)) {}               // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}   // NOLINT
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}      // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // deg num < deg den (zero counts as proper).
  bool is_proper() const { return num_.is_zero() || num_.degree() < den_.degree(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

using RatFunMatrix = Matrix<RationalFunction>;
using PolyMatrix = Matrix<Polynomial>;

std::string to_string(const RationalFunction& f, const std::string& var = "λ");

}  // namespace hmjoin
