#include "hmjoin/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hmjoin/errors.hpp"

namespace hmjoin {

MainFunction gamma_bilinear(const CharpolyAdjugate& resolvent, const QMatrix& u, const QMatrix& v) {
  const std::size_t n = resolvent.adjugate_coeffs.size();
  if (u.rows() != n || v.rows() != n)
    throw SizeMismatch("main function: side matrices need " + std::to_string(n) + " rows");
  if (u.cols() != v.cols()) throw SizeMismatch("main function: side matrices differ in width");
  const std::size_t p = u.cols();

  // V^t adj(λI − M) U coefficient by coefficient.
  const QMatrix vt = v.transpose();
  std::vector<std::vector<Rational>> coeffs(p * p, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    QMatrix c = vt * resolvent.adjugate_coeffs[k] * u;
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = 0; s < p; ++s) coeffs[r * p + s][n - 1 - k] = c(r, s);
  }

  MainFunction out;
  out.matrix = RatFunMatrix(p, p);
  out.denominator = Polynomial(1);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t s = 0; s < p; ++s) {
      out.matrix(r, s) = RationalFunction(Polynomial(std::move(coeffs[r * p + s])), resolvent.charpoly);
      out.denominator = lcm(out.denominator, out.matrix(r, s).denominator());
    }
  out.numerator = PolyMatrix(p, p);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t s = 0; s < p; ++s) {
      const auto& e = out.matrix(r, s);
      out.numerator(r, s) = e.numerator() * poly_divexact(out.denominator, e.denominator());
    }
  return out;
}

MainFunction gamma_bilinear(const QMatrix& m, const QMatrix& u, const QMatrix& v) {
  if (!m.is_square()) throw SizeMismatch("main function of a non-square matrix");
  return gamma_bilinear(charpoly_with_adjugate(m), u, v);
}

MainFunction gamma(const QMatrix& m, const QMatrix& e) { return gamma_bilinear(m, e, e); }

namespace {

Eigen::MatrixXd to_dense(const QMatrix& m) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return d;
}

std::vector<double> raw_eigenvalues(const QMatrix& m) {
  if (m.rows() == 0) return {};
  Eigen::MatrixXd d = to_dense(m);
  std::vector<double> out;
  if (m.is_symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(d, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      auto z = es.eigenvalues()(i);
      if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z))) out.push_back(z.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

std::vector<NumericEigenvalue> cluster(const std::vector<double>& sorted, double rel) {
  std::vector<NumericEigenvalue> out;
  for (double x : sorted) {
    if (!out.empty() && close(out.back().value, x, rel)) {
      auto& c = out.back();
      c.value = (c.value * c.multiplicity + x) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

// Real roots of a square-free polynomial via its companion matrix.
std::vector<double> numeric_real_roots(const Polynomial& s) {
  const int d = s.degree();
  if (d < 1) return {};
  Polynomial monic = s.monic();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -monic.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    auto z = es.eigenvalues()(i);
    if (std::abs(z.imag()) < 1e-6 * std::max(1.0, std::abs(z))) out.push_back(z.real());
  }
  return out;
}

int numeric_multiplicity_near(const std::vector<NumericEigenvalue>& spectrum, double x) {
  int count = 0;
  for (const auto& e : spectrum)
    if (close(e.value, x, 1e-6)) count += e.multiplicity;
  return count;
}

}  // namespace

std::vector<NumericEigenvalue> numeric_spectrum(const QMatrix& m) { return cluster(raw_eigenvalues(m), 1e-8); }

std::vector<Rational> rational_eigenvalues(const QMatrix& m, const Polynomial& phi) {
  // Any rational eigenvalue of M is an integer over d = lcm of entry
  // denominators, since dM is integral and its charpoly is monic over Z.
  Integer d = 1;
  for (const auto& x : m.data()) d = lcm(d, Integer(x.get_den()));
  const double scale = d.get_d();
  std::set<Rational> found;
  for (double lam : raw_eigenvalues(m)) {
    double y = lam * scale;
    if (!std::isfinite(y) || std::abs(y) > 1e15) continue;
    const auto base = static_cast<long long>(std::llround(y));
    for (long long cand : {base - 1, base, base + 1}) {
      Rational r(Integer(std::to_string(cand)), d);
      r.canonicalize();
      if (found.count(r) == 0 && phi.eval(r) == 0) found.insert(r);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<EigenClass> eigen_classes(const QMatrix& m, const Polynomial& phi, const Polynomial& g) {
  std::vector<EigenClass> out;
  Polynomial residual = phi.monic();
  for (const auto& r : rational_eigenvalues(m, phi)) {
    EigenClass c;
    c.defining = Polynomial::linear(r);
    c.value = r;
    c.multiplicity = rational_root_multiplicity(phi, r);
    c.e_main = divides(c.defining, g);
    residual = poly_divexact(residual, pow(c.defining, c.multiplicity));
    out.push_back(std::move(c));
  }
  for (auto& [s, mult] : square_free_decomposition(residual)) {
    Polynomial main_part = gcd(s, g);
    Polynomial rest = poly_divexact(s, main_part).monic();
    if (!main_part.is_constant()) out.push_back({main_part, std::nullopt, mult, true});
    if (!rest.is_constant()) out.push_back({rest, std::nullopt, mult, false});
  }
  return out;
}

std::vector<EigenClass> classify_e_main(const QMatrix& m, const QMatrix& e) {
  if (!m.is_symmetric()) throw NonSymmetricInput("E-main classification needs a symmetric matrix");
  auto resolvent = charpoly_with_adjugate(m);
  auto main = gamma_bilinear(resolvent, e, e);
  return eigen_classes(m, resolvent.charpoly, main.denominator);
}

bool numeric_is_e_main(const QMatrix& m, const QMatrix& e, double eigenvalue, double tol) {
  if (!m.is_symmetric()) throw NonSymmetricInput("eigenprojections need a symmetric matrix");
  if (e.rows() != m.rows()) throw SizeMismatch("E must have as many rows as M");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense(m));
  const Eigen::MatrixXd ed = to_dense(e);
  double norm2 = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (!close(es.eigenvalues()(i), eigenvalue, 1e-8)) continue;
    norm2 += (es.eigenvectors().col(i).transpose() * ed).squaredNorm();
  }
  return std::sqrt(norm2) > tol;
}

std::size_t BlockSystem::width() const { return left.empty() ? 0 : left.front().cols(); }

void BlockSystem::validate() const {
  const std::size_t k = diagonal.size();
  if (left.size() != k || right.size() != k) throw SizeMismatch("block system: one side matrix pair per block");
  if (coupling.size() != k) throw SizeMismatch("block system: coupling must be k × k");
  const std::size_t p = width();
  for (std::size_t i = 0; i < k; ++i) {
    if (!diagonal[i].is_square()) throw SizeMismatch("block system: diagonal block not square");
    const std::size_t n = diagonal[i].rows();
    if (left[i].rows() != n || right[i].rows() != n || left[i].cols() != p || right[i].cols() != p)
      throw SizeMismatch("block system: side matrix " + std::to_string(i) + " has the wrong shape");
    if (coupling[i].size() != k) throw SizeMismatch("block system: coupling must be k × k");
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && (coupling[i][j].rows() != p || coupling[i][j].cols() != p))
        throw SizeMismatch("block system: coupling blocks must be p × p");
  }
}

QMatrix BlockSystem::assemble() const {
  validate();
  std::vector<std::size_t> off(k() + 1, 0);
  for (std::size_t i = 0; i < k(); ++i) off[i + 1] = off[i] + diagonal[i].rows();
  QMatrix out(off.back(), off.back());
  for (std::size_t i = 0; i < k(); ++i) {
    out.set_block(off[i], off[i], diagonal[i]);
    for (std::size_t j = 0; j < k(); ++j)
      if (i != j) out.set_block(off[i], off[j], left[i] * coupling[i][j] * right[j].transpose());
  }
  return out;
}

BlockFactorization block_factorization(const BlockSystem& system) {
  system.validate();
  const std::size_t k = system.k();
  const std::size_t p = system.width();
  BlockFactorization out;
  for (std::size_t i = 0; i < k; ++i) {
    out.resolvents.push_back(charpoly_with_adjugate(system.diagonal[i]));
    out.main_functions.push_back(gamma_bilinear(out.resolvents[i], system.left[i], system.right[i]));
  }

  // Block row i of I − [Γ_i C_ij] scaled by g_i.
  PolyMatrix phi_matrix(k * p, k * p);
  int degree_bound = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& mf = out.main_functions[i];
    degree_bound += static_cast<int>(p) * std::max(0, mf.denominator.degree());
    for (std::size_t r = 0; r < p; ++r) phi_matrix(i * p + r, i * p + r) = mf.denominator;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& c = system.coupling[i][j];
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t s = 0; s < p; ++s) {
          Polynomial acc;
          for (std::size_t t = 0; t < p; ++t)
            if (c(t, s) != 0) acc += mf.numerator(r, t) * c(t, s);
          phi_matrix(i * p + r, j * p + s) = -acc;
        }
    }
  }
  out.phi = polymatrix_det(phi_matrix, degree_bound);

  Polynomial numerator = out.phi;
  Polynomial denominator(1);
  for (std::size_t i = 0; i < k; ++i) {
    numerator *= out.resolvents[i].charpoly;
    denominator *= pow(out.main_functions[i].denominator, static_cast<int>(p));
  }
  out.charpoly = poly_divexact(numerator, denominator);
  return out;
}

int SpectralReport::phi_degree_bound() const {
  int bound = 0;
  for (const auto& mf : main_functions) bound += m * std::max(0, mf.denominator.degree());
  return bound;
}

namespace {

void fill_ledger(SpectralReport& report) {
  const auto numeric = report.numeric_spectrum;
  std::map<Rational, CombinedRow> combined;
  for (std::size_t i = 0; i < report.e_main_flags.size(); ++i) {
    for (const auto& cls : report.e_main_flags[i]) {
      LedgerRow row;
      row.factor = i;
      row.eigen_class = cls;
      row.guaranteed = cls.e_main ? std::max(0, cls.multiplicity - report.m) : cls.multiplicity;
      if (cls.value) {
        row.observed = rational_root_multiplicity(report.charpoly_direct, *cls.value);
        row.observed_numeric = numeric_multiplicity_near(numeric, cls.value->get_d());
        auto& c = combined[*cls.value];
        c.value = *cls.value;
        c.guaranteed += row.guaranteed;
        c.observed = row.observed;
      } else {
        // s^e | charpoly gives the smallest multiplicity over the roots of s.
        row.observed = factor_multiplicity(report.charpoly_direct, cls.defining);
        auto roots = numeric_real_roots(cls.defining);
        if (static_cast<int>(roots.size()) == cls.defining.degree()) {
          int least = -1;
          for (double x : roots) {
            int mult = numeric_multiplicity_near(numeric, x);
            least = least < 0 ? mult : std::min(least, mult);
          }
          row.observed_numeric = least;
        }
      }
      if (row.observed < row.guaranteed)
        throw InvariantViolation("carry-forward: factor " + std::to_string(i) + " class " +
                                 to_string(cls.defining) + " guaranteed " + std::to_string(row.guaranteed) +
                                 " but observed " + std::to_string(row.observed));
      report.carry_forward.push_back(std::move(row));
    }
  }
  for (auto& [value, row] : combined) {
    if (row.observed < row.guaranteed)
      throw InvariantViolation("carry-forward: eigenvalue " + value.get_str() + " guaranteed " +
                               std::to_string(row.guaranteed) + " across factors but observed " +
                               std::to_string(row.observed));
    report.combined.push_back(row);
  }
}

SpectralReport build_report(const JoinSpec& spec, const UniversalParams& p) {
  spec.validate(true);
  p.validate();
  if (p.gamma != 0)
    throw InvalidParameters("block factorization over indexing matrices needs gamma = 0; "
                            "use the generalized-join path for gamma != 0");
  const auto corrections = degree_corrections(spec);
  const std::size_t k = spec.k();
  const auto m = static_cast<std::size_t>(spec.m);

  BlockSystem system;
  system.coupling.assign(k, std::vector<QMatrix>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = spec.factors[i];
    QMatrix mi = universal_matrix(g, p);
    for (std::size_t s = 0; s < corrections.diagonals[i].size(); ++s) mi(s, s) += p.delta * corrections.diagonals[i][s];
    QMatrix e = indexing_matrix(g, spec.indexing[i]);
    system.diagonal.push_back(std::move(mi));
    system.left.push_back(e);
    system.right.push_back(std::move(e));
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) system.coupling[i][j] = QMatrix::identity(m).scaled(Rational(spec.rho(i, j) ? p.alpha : Rational(0)));
  }

  const Graph joined = hm_join(spec);
  if (blockwise_adjacency(spec) != joined.adjacency_matrix())
    throw InvariantViolation("blockwise adjacency differs from the edge-rule join");
  const QMatrix direct = universal_matrix(joined, p);
  if (system.assemble() != direct)
    throw InvariantViolation("block assembly of the universal matrix differs from the direct matrix");

  auto fact = block_factorization(system);

  SpectralReport report;
  report.params = p;
  report.m = spec.m;
  report.charpoly_direct = charpoly(direct);
  report.charpoly_block = fact.charpoly;
  report.phi_polynomial = fact.phi;
  report.factor_matrices = system.diagonal;
  for (std::size_t i = 0; i < k; ++i) {
    report.factor_charpolys.push_back(fact.resolvents[i].charpoly);
    report.e_main_flags.push_back(
        eigen_classes(system.diagonal[i], fact.resolvents[i].charpoly, fact.main_functions[i].denominator));
  }
  report.main_functions = std::move(fact.main_functions);
  if (report.charpoly_direct != report.charpoly_block)
    throw InvariantViolation("charpoly_direct (" + to_string(report.charpoly_direct) + ") != charpoly_block (" +
                             to_string(report.charpoly_block) + ")");
  report.numeric_spectrum = numeric_spectrum(direct);
  fill_ledger(report);
  return report;
}

}  // namespace

SpectralReport block_charpoly(const JoinSpec& spec) { return build_report(spec, UniversalParams::adjacency()); }

SpectralReport universal_block_charpoly(const JoinSpec& spec, const UniversalParams& p) { return build_report(spec, p); }

std::vector<LedgerRow> carry_forward_report(const JoinSpec& spec) { return block_charpoly(spec).carry_forward; }

Factored factor_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidParameters("cannot factor the zero polynomial");
  Factored out;
  out.constant = p.leading();
  Polynomial rest = p.monic();
  const Polynomial sf = square_free_part(rest);
  // λ = y / D turns the monic square-free part into a monic integer polynomial
  // in y, so every rational root is an integer over D.
  Integer d = 1;
  for (const auto& c : sf.coeffs()) d = lcm(d, Integer(c.get_den()));
  std::set<Rational> roots;
  for (double x : numeric_real_roots(sf)) {
    const double y = x * d.get_d();
    if (!std::isfinite(y) || std::abs(y) > 1e15) continue;
    const auto base = static_cast<long long>(std::llround(y));
    for (long long cand : {base - 1, base, base + 1}) {
      Rational r(Integer(std::to_string(cand)), d);
      r.canonicalize();
      if (sf.eval(r) == 0) roots.insert(r);
    }
  }
  for (const auto& r : roots) {
    const int e = rational_root_multiplicity(rest, r);
    rest = poly_divexact(rest, pow(Polynomial::linear(r), e));
    out.linear.emplace_back(r, e);
  }
  if (!rest.is_constant()) out.residual = square_free_decomposition(rest);
  return out;
}

std::string to_factored_string(const Polynomial& p, const std::string& var) {
  const auto f = factor_rational_roots(p);
  std::string out;
  if (f.constant != 1) out += f.constant.get_str();
  auto put = [&](const Polynomial& q, int e) {
    const auto text = to_string(q, var);
    out += q.degree() == 1 && q.coeff(0) == 0 ? text : "(" + text + ")";
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (const auto& [r, e] : f.linear) put(Polynomial::linear(r), e);
  for (const auto& [q, e] : f.residual) put(q, e);
  return out.empty() ? "1" : out;
}

}  // namespace hmjoin
