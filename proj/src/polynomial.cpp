#include "hmjoin/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hmjoin/errors.hpp"

namespace hmjoin {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, 1}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out(*this);
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Horner in the ring: acc = acc * (λ + s) + c.
  Polynomial acc;
  Polynomial step(std::vector<Rational>{s, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ca = a.coeff(i), cb = b.coeff(i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw InexactDivision("(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
  return q;
}

bool divides(const Polynomial& d, const Polynomial& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).remainder.is_zero();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return poly_divexact(a * b, gcd(a, b)).monic();
}

Polynomial pow(Polynomial base, int exponent) {
  Polynomial acc(1);
  while (exponent > 0) {
    if (exponent & 1) acc *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return acc;
}

int rational_root_multiplicity(const Polynomial& p, const Rational& r) {
  if (p.is_zero()) throw InvalidParameters("root multiplicity of the zero polynomial");
  // Synthetic division by (λ - r) until the remainder is nonzero.
  std::vector<Rational> c = p.coeffs();
  int e = 0;
  while (c.size() > 1) {
    std::vector<Rational> q(c.size() - 1);
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      acc = acc * r + c[i];
      q[i - 1] = acc;
    }
    Rational rem = acc * r + c[0];
    if (rem != 0) break;
    c = std::move(q);
    ++e;
  }
  return e;
}

int factor_multiplicity(const Polynomial& p, const Polynomial& f) {
  if (p.is_zero()) throw InvalidParameters("factor multiplicity in the zero polynomial");
  if (f.is_constant()) throw InvalidParameters("factor multiplicity of a constant");
  int e = 0;
  Polynomial cur = p;
  for (;;) {
    auto [q, r] = divmod(cur, f);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++e;
  }
  return e;
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.is_constant()) return out;
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = poly_divexact(f, a).monic();
  Polynomial c = poly_divexact(f.derivative(), a);
  Polynomial d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Polynomial s = gcd(b, d);
    if (!s.is_constant()) out.emplace_back(s, i);
    b = poly_divexact(b, s).monic();
    c = poly_divexact(d, s);
    d = c - b.derivative();
  }
  return out;
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.is_constant()) return Polynomial(1);
  return poly_divexact(p, gcd(p, p.derivative())).monic();
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace hmjoin
