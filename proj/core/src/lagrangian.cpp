#include "lagplace/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "lagplace/error.hpp"
#include "lagplace/random.hpp"

namespace lagplace {

namespace {

ComplexMatrix juxtapose(const ComplexMatrix& f1, const ComplexMatrix& f2) {
  ComplexMatrix w(f1.rows(), f1.cols() + f2.cols());
  w << f1, f2;
  return w;
}

}  // namespace

std::vector<Complex> normalize_projective(const std::vector<Complex>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (v.empty() || v[best] == 0.0) {
    throw Error(ErrorKind::kInvalidPoint, "projective vector is zero");
  }
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / v[best];
  out[best] = 1.0;
  return out;
}

LagrangianPoint::LagrangianPoint(ComplexMatrix f1, ComplexMatrix f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
  const auto n = f1_.rows();
  if (n < 1 || f1_.cols() != n || f2_.rows() != n || f2_.cols() != n) {
    throw Error(ErrorKind::kDimension, "F1 and F2 must be n x n");
  }
  const ComplexMatrix w = juxtapose(f1_, f2_);
  if (numerical_rank(w) < n) {
    throw Error(ErrorKind::kInvalidPoint, "[F1 F2] is rank deficient");
  }
  const ComplexMatrix sym = f1_ * f2_.transpose();
  const double scale = std::max(1.0, max_abs(w) * max_abs(w));
  if (asymmetry(sym) >= kLagrangianTolerance * scale) {
    throw Error(ErrorKind::kInvalidPoint, "F1 F2^t is not symmetric");
  }
  plucker_ = normalize_projective(raw_plucker());
}

std::vector<Complex> LagrangianPoint::raw_plucker() const {
  return full_size_minors(juxtapose(f1_, f2_), size());
}

LagrangianPoint lagrangian_from_gain(const SymmetricGain& f) {
  const int n = f.size();
  return LagrangianPoint(f.matrix(), ComplexMatrix::Identity(n, n));
}

GainOrInfinity gain_from_lagrangian(const LagrangianPoint& p) {
  GainOrInfinity out;
  out.f2_condition = condition_number(p.F2());
  if (!(out.f2_condition < 1e8)) {
    out.at_infinity = true;
    return out;
  }
  const ComplexMatrix f = p.F2().partialPivLu().solve(p.F1());
  if (asymmetry(f) > 1e-8 * std::max(1.0, max_abs(f))) {
    throw Error(ErrorKind::kInvalidPoint, "F2^-1 F1 is not symmetric");
  }
  out.gain = SymmetricGain::symmetrized(f);
  return out;
}

namespace {

// Signed lookup of f at an unsorted index tuple; zero on repeated indices.
Complex signed_coordinate(std::vector<int> idx, const std::vector<Complex>& f,
                          const std::map<std::vector<int>, std::size_t>& pos) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0.0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
    if (idx[j] == idx[j + 1]) return 0.0;
  }
  return static_cast<double>(sign) * f[pos.at(idx)];
}

}  // namespace

std::vector<Complex> plucker_relation_residuals(const std::vector<Complex>& f,
                                                int n) {
  const auto sets = column_subsets(2 * n, n);
  if (f.size() != sets.size()) {
    throw Error(ErrorKind::kDimension, "wrong number of Plucker coordinates");
  }
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < sets.size(); ++i) pos[sets[i]] = i;
  std::vector<Complex> out;
  // sum_k (-1)^k f(I, j_k) f(J \ j_k) = 0 for |I| = n-1, |J| = n+1.
  for (const auto& small : column_subsets(2 * n, n - 1)) {
    for (const auto& large : column_subsets(2 * n, n + 1)) {
      Complex acc = 0.0;
      for (int k = 0; k <= n; ++k) {
        std::vector<int> left = small;
        left.push_back(large[k]);
        std::vector<int> right;
        for (int m = 0; m <= n; ++m) {
          if (m != k) right.push_back(large[m]);
        }
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        acc += sign * signed_coordinate(left, f, pos) * signed_coordinate(right, f, pos);
      }
      out.push_back(acc);
    }
  }
  return out;
}

CharacteristicData characteristic_cofactors(const PolyMatrix& d,
                                            const PolyMatrix& n) {
  const int size = d.rows();
  if (d.cols() != size || n.rows() != size || n.cols() != size || size < 1) {
    throw Error(ErrorKind::kDimension, "D and N must be square of equal size");
  }
  if (size > kMaxCofactorSize) {
    throw Error(ErrorKind::kScale, "cofactor expansion is limited to n <= 4");
  }
  const PolyMatrix top = PolyMatrix::hstack(d, n);
  CharacteristicData cd;
  cd.n = size;
  cd.column_sets = column_subsets(2 * size, size);
  // Rows n+1..2n (1-based) carry [F1 F2]; their index sum is fixed.
  const int bottom_rows = size * (3 * size + 1) / 2;
  for (const auto& set : cd.column_sets) {
    std::vector<int> complement;
    int index_sum = 0;
    for (int c = 0, k = 0; c < 2 * size; ++c) {
      if (k < size && set[k] == c) {
        index_sum += c + 1;
        ++k;
      } else {
        complement.push_back(c);
      }
    }
    Poly minor = poly_matrix_det(top.select_columns(complement));
    if ((bottom_rows + index_sum) % 2 != 0) minor = -minor;
    cd.delta = std::max(cd.delta, minor.degree());
    cd.cofactors.push_back(std::move(minor));
  }

  // Self-check of the expansion against the direct determinant.
  Rng rng = Rng::derive(0, "cofactor-check");
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix f = rng.complex_symmetric_matrix(size);
    const ComplexMatrix g = rng.complex_normal_matrix(size, size) +
                            ComplexMatrix::Identity(size, size);
    const ComplexMatrix f1 = g * f;
    const ComplexMatrix f2 = g;
    const Poly direct = closed_loop_charpoly_tf(d, n, f1, f2);
    const Poly expanded =
        characteristic_sum(full_size_minors(juxtapose(f1, f2), size), cd);
    const double scale = std::max(direct.max_abs_coeff(), 1.0);
    if ((direct - expanded).max_abs_coeff() > 1e-8 * scale) {
      throw Error(ErrorKind::kFormulaViolation,
                  "cofactor expansion disagrees with the determinant");
    }
  }
  return cd;
}

Poly characteristic_sum(const std::vector<Complex>& f,
                        const CharacteristicData& cd) {
  if (f.size() != cd.cofactors.size()) {
    throw Error(ErrorKind::kDimension, "wrong number of Plucker coordinates");
  }
  Poly acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0.0) acc += cd.cofactors[i] * f[i];
  }
  return acc;
}

namespace {

Poly checked_sum(const LagrangianPoint& p, const CharacteristicData& cd) {
  if (p.size() != cd.n) {
    throw Error(ErrorKind::kDimension, "point and plant sizes differ");
  }
  const Poly q = characteristic_sum(p.plucker(), cd);
  double scale = 0.0;
  for (std::size_t i = 0; i < cd.cofactors.size(); ++i) {
    scale = std::max(scale, std::abs(p.plucker()[i]) * cd.cofactors[i].max_abs_coeff());
  }
  if (q.is_zero() || q.max_abs_coeff() <= 1e-10 * scale) {
    throw Error(ErrorKind::kBaseLocus,
                "closed-loop polynomial vanishes identically (base locus)");
  }
  return q;
}

}  // namespace

Poly chi(const LagrangianPoint& p, const CharacteristicData& cd) {
  return checked_sum(p, cd).unit_max();
}

Poly chi_prime(const LagrangianPoint& p, const CharacteristicData& cd) {
  const Poly q = checked_sum(p, cd);
  if (q.odd_part_max() > 1e-8 * q.max_abs_coeff()) {
    throw Error(ErrorKind::kNotHamiltonian, "closed-loop polynomial is not even");
  }
  const Poly even = q.even_part_in_square();
  if (even.is_zero()) {
    throw Error(ErrorKind::kBaseLocus, "even part vanishes identically");
  }
  return even.unit_max();
}

PolyMatrix canonical_denominator(int n) {
  if (n < 1) throw Error(ErrorKind::kDimension, "need n >= 1");
  std::vector<Poly> diag;
  for (int k = 1; k <= n; ++k) diag.push_back(Poly::monomial(k));
  return PolyMatrix::hstack(PolyMatrix::diagonal(diag),
                            PolyMatrix::constant(ComplexMatrix::Identity(n, n)));
}

PolyMatrix canonical_hamiltonian_denominator(int n) {
  if (n < 1) throw Error(ErrorKind::kDimension, "need n >= 1");
  std::vector<Poly> diag;
  for (int k = 1; k <= n; ++k) diag.push_back(Poly::monomial(2 * k));
  return PolyMatrix::hstack(PolyMatrix::diagonal(diag),
                            PolyMatrix::constant(ComplexMatrix::Identity(n, n)));
}

DegeneracyVerdict degeneracy_dimension_check(int n, int delta, bool hamiltonian) {
  const int needed = hamiltonian ? n * (n + 1) : n * (n + 1) / 2;
  return delta < needed ? DegeneracyVerdict::kDegenerate
                        : DegeneracyVerdict::kPossible;
}

CharacteristicFunction characteristic_function(const PolyMatrix& d,
                                               const PolyMatrix& n) {
  auto cd = std::make_shared<CharacteristicData>(characteristic_cofactors(d, n));
  return [cd](const ComplexMatrix& f1, const ComplexMatrix& f2) {
    const Poly q = characteristic_sum(full_size_minors(juxtapose(f1, f2), cd->n), *cd);
    return q.padded(cd->delta + 1);
  };
}

CharacteristicFunction characteristic_function(const StateSpace& sys) {
  sys.check_dimensions();
  const int d = sys.delta();
  const int n = sys.inputs();
  const double radius = std::max(1.0, max_abs(sys.A));
  return [sys, d, n, radius](const ComplexMatrix& f1, const ComplexMatrix& f2) {
    // Interpolate det [[sI - A, B], [F1 C, F2]] on a circle; no rank check,
    // so rank-deficient [F1 F2] simply yields the zero polynomial.
    const int m = d + 1;
    const ComplexMatrix f1c = f1 * sys.C;
    std::vector<Complex> values(m);
    for (int k = 0; k < m; ++k) {
      const Complex s = radius * std::polar(1.0, 2.0 * std::acos(-1.0) * k / m);
      ComplexMatrix mat(d + n, d + n);
      mat << s * ComplexMatrix::Identity(d, d) - sys.A, sys.B, f1c, f2;
      values[k] = mat.partialPivLu().determinant();
    }
    std::vector<Complex> coeffs(m);
    for (int j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < m; ++k) {
        acc += values[k] * std::polar(1.0, -2.0 * std::acos(-1.0) * j * k / m);
      }
      coeffs[j] = acc / (static_cast<double>(m) * std::pow(radius, j));
    }
    return coeffs;
  };
}

}  // namespace lagplace
