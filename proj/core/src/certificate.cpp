#include <algorithm>
#include <cmath>
#include <limits>

#include "lagplace/error.hpp"
#include "lagplace/lagrangian.hpp"
#include "lagplace/random.hpp"

namespace lagplace {

bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

namespace {

// Exponent of p when p = +-s^alpha exactly, else -1.
int signed_monomial_exponent(const Poly& p) {
  int exponent = -1;
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex c = p.coeff(k);
    if (std::abs(c) < 1e-12) continue;
    if (exponent >= 0 || std::abs(std::abs(c.real()) - 1.0) > 1e-12 ||
        std::abs(c.imag()) > 1e-12) {
      return -1;
    }
    exponent = k;
  }
  return exponent;
}

}  // namespace

NondegeneracyCertificate nondegeneracy_certificate_diagonal(int n) {
  if (n < 1 || n > kMaxCofactorSize) {
    throw Error(ErrorKind::kScale, "certificate is limited to 1 <= n <= 4");
  }
  // Work with [D, N R], R the reversal; the Lagrangian pairing becomes
  // j <-> 2n + 1 - j.
  std::vector<Poly> diag;
  for (int k = 1; k <= n; ++k) diag.push_back(Poly::monomial(k));
  ComplexMatrix reversal = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) reversal(i, n - 1 - i) = 1.0;
  const CharacteristicData cd = characteristic_cofactors(
      PolyMatrix::diagonal(diag), PolyMatrix::constant(reversal));

  std::vector<int> exponents;
  for (const Poly& p : cd.cofactors) exponents.push_back(signed_monomial_exponent(p));

  NondegeneracyCertificate cert;
  cert.n = n;
  cert.delta = cd.delta;
  cert.pass = true;
  for (std::size_t idx = 0; idx < cd.column_sets.size(); ++idx) {
    CellCertificate cell;
    for (int c : cd.column_sets[idx]) cell.pivots.push_back(c + 1);
    const auto& pivots = cell.pivots;

    cell.isotropic_pivot = true;
    for (int a : pivots) {
      if (std::find(pivots.begin(), pivots.end(), 2 * n + 1 - a) != pivots.end()) {
        cell.isotropic_pivot = false;
      }
    }
    std::vector<int> hat;  // complement of the lower pivots in 1..n
    int k = 0;
    for (int j = 1; j <= n; ++j) {
      if (std::find(pivots.begin(), pivots.end(), j) != pivots.end()) {
        ++k;
      } else {
        hat.push_back(j);
      }
    }
    cell.complementarity = true;
    for (int l = 1; l <= n - k; ++l) {
      if (pivots[k + l - 1] != 2 * n - hat[n - k - l] + 1) cell.complementarity = false;
    }
    cell.lagrangian_cell = cell.isotropic_pivot && cell.complementarity;
    if (!cell.lagrangian_cell) {
      // No Lagrangian subspace has this pivot set; nothing to certify.
      cell.pass = true;
      cert.cells.push_back(std::move(cell));
      continue;
    }
    ++cert.lagrangian_cells;

    int alpha = 0;
    for (int h : hat) alpha += h;
    cell.monomial_cofactor = exponents[idx] == alpha;
    cell.alpha = exponents[idx];
    cell.bruhat_isolated = true;
    for (std::size_t other = 0; other < cd.column_sets.size(); ++other) {
      if (other == idx || exponents[other] != alpha) continue;
      ++cell.same_monomial_count;
      const auto& j = cd.column_sets[other];
      std::vector<int> j1;
      for (int c : j) j1.push_back(c + 1);
      if (bruhat_leq(j1, pivots) || bruhat_leq(pivots, j1)) {
        cell.bruhat_isolated = false;
      }
    }
    cell.pass = cell.monomial_cofactor && cell.bruhat_isolated;
    cert.pass = cert.pass && cell.pass;
    cert.cells.push_back(std::move(cell));
  }
  return cert;
}

namespace {

struct BaseLocusEquations {
  int n;
  const CharacteristicFunction& chi_fn;
  ComplexMatrix gauge;  // 2n x n

  ComplexVector operator()(const ComplexVector& x) const {
    const ComplexMatrix w = Eigen::Map<const ComplexMatrix>(x.data(), n, 2 * n);
    const ComplexMatrix f1 = w.leftCols(n);
    const ComplexMatrix f2 = w.rightCols(n);
    const std::vector<Complex> coeffs = chi_fn(f1, f2);
    const ComplexMatrix lag = f1 * f2.transpose() - f2 * f1.transpose();
    const ComplexMatrix fix = w * gauge - ComplexMatrix::Identity(n, n);
    ComplexVector out(coeffs.size() + n * (n - 1) / 2 + n * n);
    Eigen::Index r = 0;
    for (const Complex& c : coeffs) out(r++) = c;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out(r++) = lag(i, j);
    }
    for (Eigen::Index i = 0; i < fix.size(); ++i) out(r++) = fix.data()[i];
    return out;
  }
};

}  // namespace

BaseLocusSearchResult base_locus_search(int n,
                                        const CharacteristicFunction& chi_fn,
                                        const BaseLocusSearchOptions& options) {
  if (n < 1) throw Error(ErrorKind::kDimension, "need n >= 1");
  BaseLocusSearchResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  const int unknowns = 2 * n * n;
  for (int start = 0; start < options.starts; ++start) {
    Rng rng = Rng::derive(options.seed, "base-locus", static_cast<std::uint64_t>(start));
    const BaseLocusEquations eqs{n, chi_fn, rng.complex_normal_matrix(2 * n, n)};
    ComplexVector x(unknowns);
    for (int i = 0; i < unknowns; ++i) x(i) = rng.complex_normal();
    ComplexVector fx = eqs(x);
    double norm = fx.norm();
    for (int it = 0; it < options.max_iterations && norm > 0.0; ++it) {
      ComplexMatrix jac(fx.size(), unknowns);
      const double h = 1e-6;
      for (int j = 0; j < unknowns; ++j) {
        ComplexVector xp = x;
        ComplexVector xm = x;
        xp(j) += h;
        xm(j) -= h;
        jac.col(j) = (eqs(xp) - eqs(xm)) / (2.0 * h);
      }
      const ComplexVector step = jac.completeOrthogonalDecomposition().solve(-fx);
      double t = 1.0;
      bool improved = false;
      for (int ls = 0; ls < 30; ++ls, t /= 2) {
        const ComplexVector trial = x + t * step;
        const ComplexVector ft = eqs(trial);
        if (ft.norm() < norm) {
          x = trial;
          fx = ft;
          norm = ft.norm();
          improved = true;
          break;
        }
      }
      if (!improved || fx.cwiseAbs().maxCoeff() < options.residual_tolerance * 1e-2) break;
    }
    const double residual = fx.cwiseAbs().maxCoeff();
    result.best_residual = std::min(result.best_residual, residual);
    ++result.starts;
    if (residual < options.residual_tolerance) {
      ++result.hits;
      result.witnesses.push_back(Eigen::Map<const ComplexMatrix>(x.data(), n, 2 * n));
    }
  }
  return result;
}

}  // namespace lagplace
