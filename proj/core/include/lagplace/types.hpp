#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace lagplace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// max |M - M^t|.
double asymmetry(const ComplexMatrix& m);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double rel_tol = 1e-8);

/// sigma_max / sigma_min; +inf for singular input.
double condition_number(const ComplexMatrix& m);

/// Standard symplectic form [[0, I], [-I, 0]] of even size.
ComplexMatrix standard_symplectic(int size);

/// Power A^k by repeated multiplication.
ComplexMatrix matrix_power(const ComplexMatrix& a, int k);

/// Elementary symmetric basis of Sym(n): E_11..E_nn, then E_ij + E_ji for
/// i < j in lexicographic order. Every parameter vector in the library uses
/// this ordering.
std::vector<ComplexMatrix> symmetric_basis(int n);

/// n(n+1)/2.
constexpr int symmetric_dimension(int n) { return n * (n + 1) / 2; }

/// Index of the (i, j) parameter (0-based, any order of i, j) in the
/// symmetric_basis ordering.
int symmetric_index(int n, int i, int j);

}  // namespace lagplace
