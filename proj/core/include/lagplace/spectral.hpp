#pragma once

#include <vector>

#include "lagplace/polymat.hpp"
#include "lagplace/realization.hpp"
#include "lagplace/types.hpp"

namespace lagplace {

/// Complex symmetric n x n feedback gain, stored as its n(n+1)/2 free
/// parameters in symmetric_basis order.
class SymmetricGain {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit SymmetricGain(int n);
  /// Throws kSymmetry unless |F - F^t| < 1e-12 (scaled by max(1, |F|)).
  static SymmetricGain from_matrix(const ComplexMatrix& f);
  /// Averages F and F^t; for solver endpoints that are symmetric only to
  /// rounding.
  static SymmetricGain symmetrized(const ComplexMatrix& f);
  static SymmetricGain from_parameters(int n, const ComplexVector& params);

  int size() const { return n_; }
  const ComplexVector& parameters() const { return params_; }
  ComplexMatrix matrix() const;

 private:
  int n_;
  ComplexVector params_;
};

using TracePowerVector = std::vector<Complex>;

/// A + B F B^t.
ComplexMatrix closed_loop_matrix(const SymmetricSystem& sys,
                                 const SymmetricGain& f);
/// A + B F C.
ComplexMatrix closed_loop_matrix(const HamiltonianSystem& sys,
                                 const SymmetricGain& f);

/// (trace M, trace M^2, ..., trace M^count), repeated multiplication.
TracePowerVector trace_powers(const ComplexMatrix& m, int count);

/// Monic polynomial whose power sums are t (Newton's identities).
Poly newton_coeffs(const TracePowerVector& t);

/// Inverse of newton_coeffs: power sums p_1..p_count of the roots of a
/// monic polynomial.
TracePowerVector power_sums(const Poly& monic_poly, int count);

TracePowerVector phi_map(const SymmetricSystem& sys, const SymmetricGain& f);

inline constexpr double kOddTraceTolerance = 1e-9;
inline constexpr double kOddTraceFailure = 1e-6;

/// (trace M^2, trace M^4, ..., trace M^delta) for M = A + BFC. Odd trace
/// powers are checked relative to the scale of the even ones: above 1e-6
/// throws kStructureBroken.
std::vector<Complex> psi_map(const HamiltonianSystem& sys,
                             const SymmetricGain& f);

/// Row k (1-based) holds k * trace(A^{k-1} B E_j B^t) for basis column j.
ComplexMatrix jacobian_phi_at_zero(const SymmetricSystem& sys);
/// Row k holds 2k * trace(A^{2k-1} B E_j C).
ComplexMatrix jacobian_psi_at_zero(const HamiltonianSystem& sys);

/// det [[D(s), N(s)], [F1, F2]]. Throws kInvalidPoint if [F1 F2] is rank
/// deficient.
Poly closed_loop_charpoly_tf(const PolyMatrix& d, const PolyMatrix& n,
                             const ComplexMatrix& f1, const ComplexMatrix& f2);

/// State-space analogue det [[sI - A, B], [F1 C, F2]]; equals
/// det(sI - A - B F C) when F1 = F, F2 = I.
Poly closed_loop_charpoly_ss(const StateSpace& sys, const ComplexMatrix& f1,
                             const ComplexMatrix& f2);

/// Canonical representative of a projectively identified polynomial: monic
/// when |leading| > 1e-10, otherwise returned as is with `normalized` unset.
struct ProjectivePoly {
  Poly poly;
  bool normalized = false;
};
ProjectivePoly canonical_representative(const Poly& p);

}  // namespace lagplace
