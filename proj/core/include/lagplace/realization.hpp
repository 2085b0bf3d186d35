#pragma once

#include <vector>

#include "lagplace/types.hpp"

namespace lagplace {

/// General realization x' = Ax + Bu, y = Cx.
struct StateSpace {
  ComplexMatrix A;  // delta x delta
  ComplexMatrix B;  // delta x n
  ComplexMatrix C;  // n x delta

  int delta() const { return static_cast<int>(A.rows()); }
  int inputs() const { return static_cast<int>(B.cols()); }
  /// Throws kDimension on inconsistent shapes.
  void check_dimensions() const;
};

/// Complex symmetric realization x' = Ax + Bu, y = B^t x with A = A^t.
class SymmetricSystem {
 public:
  static constexpr double kSymmetryTolerance = 1e-10;

  /// Validates shapes and symmetry of A (throws kDimension / kSymmetry).
  SymmetricSystem(ComplexMatrix a, ComplexMatrix b);

  const ComplexMatrix& A() const { return a_; }
  const ComplexMatrix& B() const { return b_; }
  ComplexMatrix C() const { return b_.transpose(); }
  int delta() const { return static_cast<int>(a_.rows()); }
  int inputs() const { return static_cast<int>(b_.cols()); }
  StateSpace state_space() const { return {a_, b_, C()}; }

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
};

/// Hamiltonian realization: AJ = (AJ)^t and C^t = JB with J the standard
/// symplectic form. Construction checks shapes and even order only; the
/// structural identities are reported by validate_hamiltonian so that broken
/// inputs can still be diagnosed.
class HamiltonianSystem {
 public:
  static constexpr double kStructureTolerance = 1e-10;

  HamiltonianSystem(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c);

  const ComplexMatrix& A() const { return a_; }
  const ComplexMatrix& B() const { return b_; }
  const ComplexMatrix& C() const { return c_; }
  ComplexMatrix J() const { return standard_symplectic(delta()); }
  int delta() const { return static_cast<int>(a_.rows()); }
  int inputs() const { return static_cast<int>(b_.cols()); }
  StateSpace state_space() const { return {a_, b_, c_}; }

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
  ComplexMatrix c_;
};

struct MinimalityReport {
  bool minimal = false;
  int controllability_rank = 0;
  int observability_rank = 0;
  int delta = 0;
  /// Smallest / largest singular value of each Kalman matrix.
  double controllability_ratio = 0.0;
  double observability_ratio = 0.0;
};

inline constexpr double kMinimalityRankTolerance = 1e-8;

ComplexMatrix controllability_matrix(const ComplexMatrix& a,
                                     const ComplexMatrix& b);
ComplexMatrix observability_matrix(const ComplexMatrix& a,
                                   const ComplexMatrix& c);
MinimalityReport is_minimal(const StateSpace& sys);

/// C A^k B for k = 0 .. count-1.
std::vector<ComplexMatrix> markov_parameters(const StateSpace& sys, int count);

/// G(s0) = C (s0 I - A)^{-1} B.
ComplexMatrix transfer_function(const StateSpace& sys, Complex s0);

/// The unique S with (A2, B2, C2) = (S A1 S^-1, S B1, C1 S^-1).
ComplexMatrix solve_intertwiner(const StateSpace& sys1, const StateSpace& sys2);

/// Invertible X with X X^t = S for complex symmetric invertible S. Uses the
/// principal square root (Schur method), so X is itself symmetric.
ComplexMatrix factor_symmetric(const ComplexMatrix& s);

/// Principal square root of a nonsingular matrix via the complex Schur form.
ComplexMatrix principal_sqrt(const ComplexMatrix& m);

/// Orthogonal change of basis of a minimal realization with symmetric
/// transfer function into a complex symmetric realization.
SymmetricSystem symmetrize_realization(const StateSpace& sys);

struct HamiltonianReport {
  bool pass = false;
  bool even_order = false;
  double aj_asymmetry = 0.0;     // max |AJ - (AJ)^t|
  double output_mismatch = 0.0;  // max |C^t - JB|
};

HamiltonianReport validate_hamiltonian(const HamiltonianSystem& sys);

/// Companion realization of diag(1/s, 1/s^2, ..., 1/s^n): one nilpotent
/// Jordan block per channel. Not symmetric.
StateSpace diagonal_companion_realization(int n);

/// Symmetric realization of diag(1/s, ..., 1/s^n), McMillan degree
/// n(n+1)/2.
SymmetricSystem canonical_diagonal_system(int n);

/// Hamiltonian realization of H(s^2) from a symmetric realization (Q, b) of
/// H: A = [[0, I], [Q, 0]], B = [0; b], C = [b^t, 0].
HamiltonianSystem hamiltonian_lift(const SymmetricSystem& sys);

}  // namespace lagplace
