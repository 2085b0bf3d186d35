#include "lagplace/realization.hpp"

#include <algorithm>
#include <cmath>

#include "lagplace/error.hpp"

namespace lagplace {

void StateSpace::check_dimensions() const {
  const auto d = A.rows();
  if (d < 1 || A.cols() != d || B.rows() != d || B.cols() < 1 || C.cols() != d ||
      C.rows() < 1) {
    throw Error(ErrorKind::kDimension, "inconsistent state-space dimensions");
  }
}

SymmetricSystem::SymmetricSystem(ComplexMatrix a, ComplexMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  StateSpace{a_, b_, b_.transpose()}.check_dimensions();
  if (asymmetry(a_) > kSymmetryTolerance * std::max(1.0, max_abs(a_))) {
    throw Error(ErrorKind::kSymmetry, "symmetric realization needs A = A^t");
  }
  a_ = (0.5 * (a_ + a_.transpose())).eval();
}

HamiltonianSystem::HamiltonianSystem(ComplexMatrix a, ComplexMatrix b,
                                     ComplexMatrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  StateSpace{a_, b_, c_}.check_dimensions();
  if (a_.rows() % 2 != 0) {
    throw Error(ErrorKind::kDimension, "Hamiltonian realization needs even order");
  }
  if (c_.rows() != b_.cols()) {
    throw Error(ErrorKind::kDimension, "Hamiltonian realization needs square G");
  }
}

ComplexMatrix controllability_matrix(const ComplexMatrix& a,
                                     const ComplexMatrix& b) {
  const auto d = a.rows();
  const auto m = b.cols();
  ComplexMatrix out(d, d * m);
  out.leftCols(m) = b;
  for (Eigen::Index i = 1; i < d; ++i) {
    out.middleCols(m * i, m) = a * out.middleCols(m * (i - 1), m);
  }
  return out;
}

ComplexMatrix observability_matrix(const ComplexMatrix& a,
                                   const ComplexMatrix& c) {
  return controllability_matrix(a.transpose(), c.transpose()).transpose();
}

namespace {

double rank_ratio(const ComplexMatrix& m, Eigen::Index d) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() < d || sv(0) == 0.0) return 0.0;
  return sv(d - 1) / sv(0);
}

}  // namespace

MinimalityReport is_minimal(const StateSpace& sys) {
  sys.check_dimensions();
  MinimalityReport report;
  report.delta = sys.delta();
  const ComplexMatrix ctrb = controllability_matrix(sys.A, sys.B);
  const ComplexMatrix obsv = observability_matrix(sys.A, sys.C);
  report.controllability_rank = numerical_rank(ctrb, kMinimalityRankTolerance);
  report.observability_rank = numerical_rank(obsv, kMinimalityRankTolerance);
  report.controllability_ratio = rank_ratio(ctrb, sys.A.rows());
  report.observability_ratio = rank_ratio(obsv, sys.A.rows());
  report.minimal = report.controllability_rank == report.delta &&
                   report.observability_rank == report.delta;
  return report;
}

std::vector<ComplexMatrix> markov_parameters(const StateSpace& sys, int count) {
  sys.check_dimensions();
  std::vector<ComplexMatrix> out;
  ComplexMatrix akb = sys.B;
  for (int k = 0; k < count; ++k) {
    out.push_back(sys.C * akb);
    akb = sys.A * akb;
  }
  return out;
}

ComplexMatrix transfer_function(const StateSpace& sys, Complex s0) {
  sys.check_dimensions();
  const ComplexMatrix resolvent =
      s0 * ComplexMatrix::Identity(sys.delta(), sys.delta()) - sys.A;
  return sys.C * resolvent.partialPivLu().solve(sys.B);
}

namespace {

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

constexpr double kIntertwinerRankTolerance = 1e-10;
constexpr double kIntertwinerResidual = 1e-8;

}  // namespace

ComplexMatrix solve_intertwiner(const StateSpace& sys1, const StateSpace& sys2) {
  sys1.check_dimensions();
  sys2.check_dimensions();
  if (sys1.delta() != sys2.delta() || sys1.B.cols() != sys2.B.cols() ||
      sys1.C.rows() != sys2.C.rows()) {
    throw Error(ErrorKind::kDimension, "intertwined systems differ in shape");
  }
  const Eigen::Index d = sys1.delta();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  // Unknown vec(S), column-major: S A1 - A2 S = 0, S B1 = B2, C2 S = C1.
  const ComplexMatrix k_a = kron(sys1.A.transpose(), id) - kron(id, sys2.A);
  const ComplexMatrix k_b = kron(sys1.B.transpose(), id);
  const ComplexMatrix k_c = kron(id, sys2.C);
  ComplexMatrix k(k_a.rows() + k_b.rows() + k_c.rows(), d * d);
  k << k_a, k_b, k_c;
  ComplexVector rhs(k.rows());
  rhs << ComplexVector::Zero(k_a.rows()), vec(sys2.B), vec(sys1.C);

  Eigen::JacobiSVD<ComplexMatrix> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= kIntertwinerRankTolerance * sv(0)) {
    throw Error(ErrorKind::kNonUnique,
                "intertwining equations are rank deficient (non-minimal input?)");
  }
  const ComplexVector s = svd.solve(rhs);
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  const double residual = (k * s - rhs).cwiseAbs().maxCoeff() / scale;
  if (residual > kIntertwinerResidual) {
    throw Error(ErrorKind::kNoIntertwiner,
                "no similarity relates the two realizations (residual " +
                    std::to_string(residual) + ")");
  }
  return Eigen::Map<const ComplexMatrix>(s.data(), d, d);
}

ComplexMatrix principal_sqrt(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimension, "square root of a non-square matrix");
  }
  const Eigen::Index n = m.rows();
  Eigen::ComplexSchur<ComplexMatrix> schur(m);
  const ComplexMatrix& t = schur.matrixT();
  ComplexMatrix r = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lambda = t(i, i);
    if (lambda == 0.0) {
      throw Error(ErrorKind::kSingular, "square root of a singular matrix");
    }
    if (lambda.imag() == 0.0 && lambda.real() < 0.0) {
      r(i, i) = Complex(0.0, std::sqrt(-lambda.real()));
    } else {
      r(i, i) = std::sqrt(lambda);
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      Complex acc = t(i, j);
      for (Eigen::Index k = i + 1; k < j; ++k) acc -= r(i, k) * r(k, j);
      const Complex denom = r(i, i) + r(j, j);
      if (denom == 0.0) {
        throw Error(ErrorKind::kSingular, "no primary square root");
      }
      r(i, j) = acc / denom;
    }
  }
  return schur.matrixU() * r * schur.matrixU().adjoint();
}

ComplexMatrix factor_symmetric(const ComplexMatrix& s) {
  if (s.rows() != s.cols()) {
    throw Error(ErrorKind::kDimension, "symmetric factorization of a non-square matrix");
  }
  const double scale = max_abs(s);
  if (asymmetry(s) > 1e-10 * std::max(1.0, scale)) {
    throw Error(ErrorKind::kSymmetry, "symmetric factorization needs S = S^t");
  }
  if (condition_number(s) >= 1e8) {
    throw Error(ErrorKind::kSingular, "S is numerically singular");
  }
  const ComplexMatrix sym = 0.5 * (s + s.transpose());
  ComplexMatrix x = principal_sqrt(sym);
  // a primary square root is a polynomial in S, hence symmetric
  x = (0.5 * (x + x.transpose())).eval();
  if (max_abs(x * x.transpose() - sym) > 1e-8 * scale) {
    throw Error(ErrorKind::kSingular, "square root lost accuracy");
  }
  return x;
}

SymmetricSystem symmetrize_realization(const StateSpace& sys) {
  sys.check_dimensions();
  if (sys.B.cols() != sys.C.rows()) {
    throw Error(ErrorKind::kDimension, "symmetric transfer function must be square");
  }
  if (!is_minimal(sys).minimal) {
    throw Error(ErrorKind::kNotMinimal, "realization is not minimal");
  }
  for (const ComplexMatrix& mk : markov_parameters(sys, 2 * sys.delta())) {
    if (asymmetry(mk) > 1e-8 * std::max(1.0, max_abs(mk))) {
      throw Error(ErrorKind::kNotSymmetricTransfer,
                  "Markov parameters are not symmetric");
    }
  }
  const StateSpace dual{sys.A.transpose(), sys.C.transpose(), sys.B.transpose()};
  ComplexMatrix s = solve_intertwiner(sys, dual);
  s = (0.5 * (s + s.transpose())).eval();
  // S = X X^t; the change of basis T = X^t gives T A T^-1 symmetric and
  // C T^-1 = (T B)^t.
  const ComplexMatrix t = factor_symmetric(s).transpose();
  const auto lu = t.partialPivLu();
  const ComplexMatrix a_new = t * lu.solve(sys.A.transpose()).transpose();
  const ComplexMatrix b_new = t * sys.B;
  return SymmetricSystem(0.5 * (a_new + a_new.transpose()), b_new);
}

HamiltonianReport validate_hamiltonian(const HamiltonianSystem& sys) {
  HamiltonianReport report;
  report.even_order = sys.delta() % 2 == 0;
  const ComplexMatrix j = sys.J();
  const ComplexMatrix aj = sys.A() * j;
  report.aj_asymmetry = max_abs(aj - aj.transpose());
  report.output_mismatch = max_abs(sys.C().transpose() - j * sys.B());
  report.pass = report.even_order &&
                report.aj_asymmetry < HamiltonianSystem::kStructureTolerance &&
                report.output_mismatch < HamiltonianSystem::kStructureTolerance;
  return report;
}

StateSpace diagonal_companion_realization(int n) {
  if (n < 1) throw Error(ErrorKind::kDimension, "need n >= 1");
  const int delta = n * (n + 1) / 2;
  StateSpace sys{ComplexMatrix::Zero(delta, delta), ComplexMatrix::Zero(delta, n),
                 ComplexMatrix::Zero(n, delta)};
  int offset = 0;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i + 1 < k; ++i) sys.A(offset + i, offset + i + 1) = 1.0;
    sys.B(offset + k - 1, k - 1) = 1.0;
    sys.C(k - 1, offset) = 1.0;
    offset += k;
  }
  return sys;
}

SymmetricSystem canonical_diagonal_system(int n) {
  return symmetrize_realization(diagonal_companion_realization(n));
}

HamiltonianSystem hamiltonian_lift(const SymmetricSystem& sys) {
  const int d = sys.delta();
  const int n = sys.inputs();
  ComplexMatrix a = ComplexMatrix::Zero(2 * d, 2 * d);
  a.topRightCorner(d, d).setIdentity();
  a.bottomLeftCorner(d, d) = sys.A();
  ComplexMatrix b = ComplexMatrix::Zero(2 * d, n);
  b.bottomRows(d) = sys.B();
  ComplexMatrix c = ComplexMatrix::Zero(n, 2 * d);
  c.leftCols(d) = sys.B().transpose();
  return HamiltonianSystem(std::move(a), std::move(b), std::move(c));
}

}  // namespace lagplace
