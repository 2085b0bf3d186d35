#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lagplace/polymat.hpp"
#include "lagplace/realization.hpp"
#include "lagplace/spectral.hpp"
#include "lagplace/types.hpp"

namespace lagplace {

/// A point rowsp [F1 F2] of the Lagrangian Grassmannian LG(n).
class LagrangianPoint {
 public:
  static constexpr double kLagrangianTolerance = 1e-9;

  /// Throws kInvalidPoint if [F1 F2] is not of full row rank or
  /// F1 F2^t is not symmetric.
  LagrangianPoint(ComplexMatrix f1, ComplexMatrix f2);

  int size() const { return static_cast<int>(f1_.rows()); }
  const ComplexMatrix& F1() const { return f1_; }
  const ComplexMatrix& F2() const { return f2_; }
  /// Maximal minors of [F1 F2] in lexicographic column order, divided by
  /// the coordinate of largest magnitude (ties: lowest index).
  const std::vector<Complex>& plucker() const { return plucker_; }
  /// Maximal minors without normalization.
  std::vector<Complex> raw_plucker() const;

 private:
  ComplexMatrix f1_;
  ComplexMatrix f2_;
  std::vector<Complex> plucker_;
};

/// Divide by the entry of largest magnitude (ties: lowest index).
std::vector<Complex> normalize_projective(const std::vector<Complex>& v);

LagrangianPoint lagrangian_from_gain(const SymmetricGain& f);

struct GainOrInfinity {
  std::optional<SymmetricGain> gain;
  bool at_infinity = false;
  double f2_condition = 0.0;
};

/// (F2)^{-1} F1 when cond(F2) < 1e8, otherwise the at-infinity flag.
GainOrInfinity gain_from_lagrangian(const LagrangianPoint& p);

/// Residuals of all quadratic Plucker relations of Grass(n, 2n) at the
/// given coordinates (lexicographic order).
std::vector<Complex> plucker_relation_residuals(const std::vector<Complex>& f,
                                                int n);

/// Cofactors p_I(s) of the Plucker coordinates in
/// det [[D(s), N(s)], [F1, F2]] = sum_I p_I(s) f_I.
struct CharacteristicData {
  std::vector<Poly> cofactors;
  std::vector<std::vector<int>> column_sets;  // I for each cofactor, 0-based
  int n = 0;
  int delta = 0;  // max cofactor degree
};

inline constexpr int kMaxCofactorSize = 4;

/// Generalized Laplace expansion along the bottom n rows; self-checked
/// against the direct determinant at five random Lagrangian points.
/// Throws kScale for n > 4.
CharacteristicData characteristic_cofactors(const PolyMatrix& d,
                                            const PolyMatrix& n);

/// sum_I f_I p_I(s) with raw coordinates f.
Poly characteristic_sum(const std::vector<Complex>& f,
                        const CharacteristicData& cd);

/// Characteristic map: the closed-loop polynomial of P normalized to unit
/// max coefficient. Throws kBaseLocus when it vanishes identically.
Poly chi(const LagrangianPoint& p, const CharacteristicData& cd);

/// Even part of chi as a polynomial in u = s^2. Throws kNotHamiltonian when
/// the odd part exceeds 1e-8 relative, kBaseLocus when the even part is 0.
Poly chi_prime(const LagrangianPoint& p, const CharacteristicData& cd);

/// Left coprime factorization [D N] = [diag(s, .., s^n) | I] of the
/// canonical diagonal example.
PolyMatrix canonical_denominator(int n);
/// diag(s^2, ..., s^{2n}) for the Hamiltonian companion G(s^2).
PolyMatrix canonical_hamiltonian_denominator(int n);

enum class DegeneracyVerdict { kDegenerate, kPossible };

/// Dimension predicate: degenerate whenever delta < n(n+1)/2 (symmetric) or
/// delta < n(n+1) (Hamiltonian).
DegeneracyVerdict degeneracy_dimension_check(int n, int delta,
                                             bool hamiltonian);

/// One Schubert cell of Grass(n, 2n), pivot = last nonzero entry per row.
struct CellCertificate {
  std::vector<int> pivots;       // 1-based, ascending
  bool isotropic_pivot = false;  // coordinate subspace is Lagrangian
  bool complementarity = false;  // pivot rule i_{k+l} = 2n - i^_{n-k-l+1} + 1
  bool lagrangian_cell = false;  // both agree that the cell meets LG
  bool monomial_cofactor = false;
  int alpha = -1;                // exponent of the +-s^alpha cofactor
  int same_monomial_count = 0;   // other coordinates with the same monomial
  bool bruhat_isolated = false;  // none of them is Bruhat-comparable
  bool pass = false;
};

struct NondegeneracyCertificate {
  int n = 0;
  int delta = 0;
  std::vector<CellCertificate> cells;  // all C(2n, n) pivot sets
  int lagrangian_cells = 0;
  bool pass = false;
};

/// Combinatorial nondegeneracy certificate of diag(1/s, ..., 1/s^n)
/// for 1 <= n <= 4.
NondegeneracyCertificate nondegeneracy_certificate_diagonal(int n);

/// Componentwise order on ascending index tuples.
bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b);

/// Coefficients of the closed-loop polynomial of [F1 F2] for some plant,
/// padded to a fixed length.
using CharacteristicFunction = std::function<std::vector<Complex>(
    const ComplexMatrix& f1, const ComplexMatrix& f2)>;

struct BaseLocusSearchOptions {
  int starts = 200;
  int max_iterations = 80;
  double residual_tolerance = 1e-10;
  std::uint64_t seed = 1;
};

struct BaseLocusSearchResult {
  int starts = 0;
  int hits = 0;  // starts converging to a base-locus point
  double best_residual = 0.0;
  std::vector<ComplexMatrix> witnesses;  // [F1 F2] for each hit
};

/// Randomized Gauss-Newton search for Lagrangian [F1 F2] with identically
/// vanishing characteristic polynomial. A refutation tool: zero hits is
/// evidence, not proof, of nondegeneracy.
BaseLocusSearchResult base_locus_search(int n,
                                        const CharacteristicFunction& chi_fn,
                                        const BaseLocusSearchOptions& options);

CharacteristicFunction characteristic_function(const PolyMatrix& d,
                                               const PolyMatrix& n);
CharacteristicFunction characteristic_function(const StateSpace& sys);

}  // namespace lagplace
