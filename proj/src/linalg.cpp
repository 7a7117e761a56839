#include "hmjoin/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace hmjoin {

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row: det(M) = det(W) / Π scale_r.
  std::vector<Integer> w(n * n);
  Integer scale_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < n; ++c) scale = lcm(scale, Integer(m(r, c).get_den()));
    scale_product *= scale;
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = m(r, c) * scale;
      w[r * n + c] = v.get_num();
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return w[r * n + c]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale_product);
  det.canonicalize();
  return det;
}

PolyMatrix CharpolyAdjugate::adjugate() const {
  const std::size_t n = adjugate_coeffs.size();
  PolyMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Rational> coeffs(n);
      for (std::size_t k = 0; k < n; ++k) coeffs[n - 1 - k] = adjugate_coeffs[k](r, c);
      out(r, c) = Polynomial(std::move(coeffs));
    }
  return out;
}

CharpolyAdjugate charpoly_with_adjugate(const QMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  CharpolyAdjugate out;
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  if (n == 0) {
    out.charpoly = Polynomial(1);
    return out;
  }
  // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  QMatrix mk = QMatrix::identity(n);
  out.adjugate_coeffs.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.adjugate_coeffs.push_back(mk);
    QMatrix amk = m * mk;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / static_cast<long>(k);
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) amk(i, i) += c[n - k];
      mk = std::move(amk);
    }
  }
  out.charpoly = Polynomial(std::move(c));
  return out;
}

Polynomial charpoly(const QMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(col + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col + 1));
    }
    const Rational pivot = h(col + 1, col);
    for (std::size_t j = col + 2; j < n; ++j) {
      if (h(j, col) == 0) continue;
      Rational u = h(j, col) / pivot;
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(col + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) += u * h(r, j);
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial(1);
  const Polynomial x = Polynomial::x();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (x - Polynomial(h(k - 1, k - 1))) * p[k - 1];
    Rational t(1);
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      p[k] -= p[k - i - 1] * Rational(t * h(k - i - 1, k - 1));
    }
  }
  return p[n];
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw SizeMismatch("interpolation data sizes differ");
  // Divided differences, then Newton form expanded by Horner.
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Polynomial acc;
  for (std::size_t i = n; i-- > 0;) {
    acc *= Polynomial::linear(xs[i]);
    acc += Polynomial(dd[i]);
  }
  return acc;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("HMJOIN_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Polynomial polymatrix_det(const PolyMatrix& m, int degree_bound) {
  if (!m.is_square()) throw SizeMismatch("determinant of a non-square polynomial matrix");
  if (degree_bound < 0) degree_bound = 0;
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<Rational> xs(points), ys(points);
  // Points centred on 0 keep the evaluated entries small.
  for (std::size_t i = 0; i < points; ++i) xs[i] = static_cast<long>(i) - static_cast<long>(points / 2);

  auto evaluate_range = [&](std::size_t begin, std::size_t stride) {
    QMatrix at(n, n);
    for (std::size_t i = begin; i < points; i += stride) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c).eval(xs[i]);
      ys[i] = determinant(at);
    }
  };
  const std::size_t workers = std::min<std::size_t>(worker_threads(), points);
  if (workers <= 1) {
    evaluate_range(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(evaluate_range, w, workers);
  }
  return interpolate(xs, ys);
}

Polynomial cofactor_det(const PolyMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("determinant of a non-square polynomial matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m(0, 0);
  Polynomial acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = m(r, cc);
      }
    Polynomial term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

}  // namespace hmjoin
