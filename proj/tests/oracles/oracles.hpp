#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lagplace/polymat.hpp"
#include "lagplace/random.hpp"
#include "lagplace/types.hpp"

// Reference computations used only by the tests. Each one takes a route
// unrelated to the library routine it checks.
namespace lagplace::oracle {

/// Coefficients (ascending) of det m(s) from determinant values at roots of
/// unity followed by an inverse discrete Fourier transform.
std::vector<Complex> det_by_interpolation(const PolyMatrix& m);

/// Ascending coefficients of det(sI - A) by the Faddeev-LeVerrier recursion.
std::vector<Complex> faddeev_leverrier(const ComplexMatrix& a);

/// Leibniz permutation sum.
Complex permutation_det(const ComplexMatrix& m);

/// Central differences of a holomorphic map along the real axis of each
/// coordinate.
ComplexMatrix finite_difference_jacobian(
    const std::function<ComplexVector(const ComplexVector&)>& f, const ComplexVector& x,
    double h);

/// Rank of [B, AB, ..., A^{d-1}B] from singular values, relative tolerance.
int kalman_rank(const ComplexMatrix& a, const ComplexMatrix& b, double rel_tol = 1e-8);

/// Number of standard tableaux of shifted staircase shape (n, n-1, ..., 1),
/// counted by dynamic programming over shifted subshapes.
std::uint64_t shifted_staircase_tableaux(int n);

/// max |a_k - b_k| / max(1, max |b_k|) over padded coefficient lists.
double coeff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Symmetric d x d matrix whose graph is a random spanning tree plus
/// `extra_edges` random chords, with vertices randomly permuted. The
/// diagonal is zero or Gaussian.
ComplexMatrix random_connected_symmetric(int d, int extra_edges, bool zero_diagonal, Rng& rng);

/// Block-diagonal symmetric matrix with connected blocks of the given
/// sizes, conjugated by a random permutation.
ComplexMatrix random_block_symmetric(const std::vector<int>& block_sizes, bool zero_diagonal,
                                     Rng& rng);

}  // namespace lagplace::oracle
