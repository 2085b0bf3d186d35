#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "lagplace/polymat.hpp"
#include "lagplace/random.hpp"
#include "lagplace/realization.hpp"
#include "lagplace/spectral.hpp"

namespace lagplace {

using AnySystem = std::variant<SymmetricSystem, HamiltonianSystem>;

int system_delta(const AnySystem& sys);
int system_inputs(const AnySystem& sys);
bool is_hamiltonian(const AnySystem& sys);

/// Find F = F^t such that the closed loop has characteristic polynomial
/// `target`.
class PlacementProblem {
 public:
  /// Throws kPrecondition unless the target is monic of degree delta (and
  /// even, within 1e-10, for Hamiltonian systems).
  PlacementProblem(AnySystem system, Poly target);

  const AnySystem& system() const { return system_; }
  const Poly& target() const { return target_; }
  bool hamiltonian() const { return is_hamiltonian(system_); }
  int inputs() const { return system_inputs(system_); }
  int delta() const { return system_delta(system_); }
  int unknowns() const { return symmetric_dimension(inputs()); }
  int equations() const { return hamiltonian() ? delta() / 2 : delta(); }
  bool square() const { return equations() == unknowns(); }

 private:
  AnySystem system_;
  Poly target_;
};

/// Polynomial map whose zeros are the pole-placing gains. Equation i
/// matches the power sum of order degrees[i] of the closed-loop spectrum to
/// that of the target; by Newton's identities this is equivalent to
/// matching the characteristic polynomial coefficients.
struct CoefficientSystem {
  int equations = 0;
  int unknowns = 0;
  std::vector<int> degrees;  // (1, .., delta) or (2, 4, .., delta)
  std::vector<Complex> target_power_sums;

  std::function<ComplexVector(const ComplexVector& params)> evaluate;
  std::function<ComplexMatrix(const ComplexVector& params)> jacobian;
  /// Closed-loop coefficient residual c(F) - target, ascending degree.
  std::function<ComplexVector(const ComplexVector& params)> coefficient_residual;

  /// Product of the degrees.
  std::uint64_t bezout_number() const;
};

CoefficientSystem coefficient_system(const PlacementProblem& prob);

struct SolverConfig {
  double initial_step = 1e-2;
  double min_step = 1e-14;
  double max_step = 0.1;
  int max_corrector_iterations = 4;
  /// The first Newton correction after a prediction may not exceed this
  /// multiple of (1 + |z|); larger corrections are treated as possible
  /// path jumps and the step is halved.
  double corrector_trust = 1e-4;
  int successes_before_expand = 3;
  double corrector_tolerance = 1e-10;
  /// A corrector whose updates stop contracting is still accepted when the
  /// last update is below this multiple of (1 + |z|).
  double corrector_noise_floor = 1e-6;
  double divergence_norm = 1e8;
  double cluster_radius = 1e-6;
  double polish_tolerance = 1e-10;
  int polish_iterations = 12;
  double accept_residual = 1e-7;
  std::uint64_t max_paths = 100000;
  int max_steps_per_path = 100000;
  double failure_rate_limit = 0.05;
  int retrack_rounds = 2;
  int threads = 0;  // 0: LAGPLACE_THREADS or hardware concurrency
};

struct SolutionSet {
  std::vector<SymmetricGain> gains;
  std::vector<double> residuals;               // verify_solution residual
  std::vector<int> cluster_multiplicities;
  std::vector<double> pre_symmetrization_asymmetry;
  std::uint64_t paths_tracked = 0;
  /// Every path that did not end at a finite solution: escaped to
  /// ||F|| > divergence_norm, stalled at the step floor, or failed.
  std::uint64_t paths_diverged = 0;
  /// Subset of paths_diverged whose limit was a well-conditioned
  /// Lagrangian point with identically vanishing characteristic polynomial.
  std::uint64_t paths_to_base_locus = 0;
  /// Subset of paths_diverged that stalled far from t = 1.
  std::uint64_t paths_failed = 0;
  std::uint64_t retracked = 0;
  std::uint64_t seed = 0;

  int finite_count() const { return static_cast<int>(gains.size()); }
  int total_multiplicity() const;
};

/// Total-degree homotopy on the projectivized power-sum system with the
/// gamma trick. Throws kNotSquare for non-square problems, kScale when the
/// Bezout number exceeds max_paths, kUnreliableRun when more than 5% of the
/// paths fail.
SolutionSet track_all_paths(const PlacementProblem& prob, std::uint64_t seed,
                            const SolverConfig& config = {});

/// Same as track_all_paths; requires a Hamiltonian system with
/// delta = n(n+1).
SolutionSet track_all_paths_hamiltonian(const PlacementProblem& prob,
                                        std::uint64_t seed,
                                        const SolverConfig& config = {});

struct VerificationReport {
  double residual = 0.0;    // max coeff deviation / max(1, max |target|)
  double odd_ratio = 0.0;   // odd-coefficient share of the closed loop
  bool pass = false;
  Poly closed_loop;
};

inline constexpr double kVerifyTolerance = 1e-7;

VerificationReport verify_solution(const AnySystem& sys, const SymmetricGain& f,
                                   const Poly& target);

/// Complex orthogonal matrix as a product of Givens rotations with random
/// complex angles over every plane.
ComplexMatrix random_complex_orthogonal(int size, Rng& rng);

/// Symmetric case: A = Q D Q^t, B complex Gaussian. Hamiltonian case: the
/// block construction A = S^-1 [[0, D1], [D1, 0]] S, S = diag(S1, S1),
/// B = [0; B1], C = [B1^t 0]. Minimality is verified (10 resamples).
AnySystem random_generic_system(int n, int delta, bool hamiltonian,
                                std::uint64_t seed);

/// Monic target with complex Gaussian roots; roots come in +-r pairs for
/// Hamiltonian targets.
Poly random_target(int delta, bool hamiltonian, std::uint64_t seed);

/// Symmetric system with A = S^t diag(1..delta) S where S makes the diagonal
/// projection bijective on {B F B^t}; d(phi)_0 is onto. Requires
/// delta = n(n+1)/2 = columns of B.
SymmetricSystem surjective_symmetric_system(const ComplexMatrix& b);
/// Hamiltonian counterpart built from B1 (delta/2 x n).
HamiltonianSystem surjective_hamiltonian_system(const ComplexMatrix& b1);

}  // namespace lagplace
