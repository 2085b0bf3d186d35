#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

#include "lagplace/error.hpp"
#include "lagplace/types.hpp"

namespace lagplace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension: return "dimension error";
    case ErrorKind::kSymmetry: return "symmetry error";
    case ErrorKind::kSingular: return "singularity error";
    case ErrorKind::kPrecondition: return "precondition error";
    case ErrorKind::kNoIntertwiner: return "no-intertwiner error";
    case ErrorKind::kNonUnique: return "non-uniqueness error";
    case ErrorKind::kNotSymmetricTransfer: return "not-symmetric-transfer-function error";
    case ErrorKind::kNotMinimal: return "minimality error";
    case ErrorKind::kStructureBroken: return "structure-broken error";
    case ErrorKind::kInvalidPoint: return "invalid-point error";
    case ErrorKind::kBaseLocus: return "base-locus error";
    case ErrorKind::kNotHamiltonian: return "not-Hamiltonian error";
    case ErrorKind::kScale: return "scale error";
    case ErrorKind::kDegenerateInput: return "degenerate-input error";
    case ErrorKind::kRank: return "rank error";
    case ErrorKind::kConstructionFailed: return "construction-failed error";
    case ErrorKind::kFormulaViolation: return "formula-violation error";
    case ErrorKind::kNotSquare: return "not-square error";
    case ErrorKind::kUnreliableRun: return "unreliable-run error";
    case ErrorKind::kGeneration: return "generation error";
  }
  return "error";
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimension, "asymmetry of a non-square matrix");
  }
  return max_abs(m - m.transpose());
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++rank;
  }
  return rank;
}

double condition_number(const ComplexMatrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

ComplexMatrix standard_symplectic(int size) {
  if (size % 2 != 0) {
    throw Error(ErrorKind::kDimension, "symplectic form needs even size");
  }
  const int h = size / 2;
  ComplexMatrix j = ComplexMatrix::Zero(size, size);
  j.topRightCorner(h, h).setIdentity();
  j.bottomLeftCorner(h, h) = -ComplexMatrix::Identity(h, h);
  return j;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int k) {
  ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) result = result * a;
  return result;
}

std::vector<ComplexMatrix> symmetric_basis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(symmetric_dimension(n)));
  for (int i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

int symmetric_index(int n, int i, int j) {
  if (i == j) return i;
  if (i > j) std::swap(i, j);
  // off-diagonal pairs (a, b), a < b, enumerated lexicographically
  int index = n;
  for (int a = 0; a < i; ++a) index += n - a - 1;
  return index + (j - i - 1);
}

}  // namespace lagplace
