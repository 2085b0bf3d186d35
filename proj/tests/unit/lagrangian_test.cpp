#include "lagplace/lagrangian.hpp"

#include <gtest/gtest.h>

#include "lagplace/error.hpp"
#include "lagplace/random.hpp"
#include "oracles/oracles.hpp"

namespace lagplace {
namespace {

SymmetricGain random_gain(int n, Rng& rng) {
  return SymmetricGain::from_matrix(rng.complex_symmetric_matrix(n));
}

GTEST_TEST(LagrangianPointTest, Validation) {
  EXPECT_THROW(LagrangianPoint(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)), Error);
  ComplexMatrix nonsym(2, 2);
  nonsym << 1.0, 2.0, 3.0, 4.0;
  EXPECT_THROW(LagrangianPoint(ComplexMatrix::Identity(2, 2), nonsym), Error);
}

GTEST_TEST(LagrangianPointTest, PluckerRelationsHold) {
  Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    const LagrangianPoint p = lagrangian_from_gain(random_gain(n, rng));
    const auto& f = p.plucker();
    ASSERT_EQ(f.size(), column_subsets(2 * n, n).size());
    double biggest = 0.0;
    for (const Complex& x : f) biggest = std::max(biggest, std::abs(x));
    EXPECT_DOUBLE_EQ(biggest, 1.0);
    for (const Complex& r : plucker_relation_residuals(f, n)) EXPECT_LT(std::abs(r), 1e-10);
  }
  // A generic point of Grass(2, 4) violates the single relation.
  const std::vector<Complex> bad{1.0, 1.0, 1.0, 1.0, 1.0, 0.5};
  const auto residuals = plucker_relation_residuals(bad, 2);
  double worst = 0.0;
  for (const Complex& r : residuals) worst = std::max(worst, std::abs(r));
  EXPECT_GT(worst, 0.1);
}

GTEST_TEST(LagrangianPointTest, GainRoundTrip) {
  Rng rng(2);
  const SymmetricGain f = random_gain(3, rng);
  const GainOrInfinity back = gain_from_lagrangian(lagrangian_from_gain(f));
  ASSERT_TRUE(back.gain.has_value());
  EXPECT_FALSE(back.at_infinity);
  EXPECT_LT(max_abs(back.gain->matrix() - f.matrix()), 1e-10);

  const GainOrInfinity pure =
      gain_from_lagrangian(LagrangianPoint(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)));
  EXPECT_TRUE(pure.at_infinity);
  EXPECT_FALSE(pure.gain.has_value());
}

GTEST_TEST(CofactorTest, ScalarCase) {
  // det [[s, 1], [f1, f2]] = s f2 - f1.
  const CharacteristicData cd = characteristic_cofactors(
      PolyMatrix::diagonal({Poly::monomial(1)}),
      PolyMatrix::constant(ComplexMatrix::Identity(1, 1)));
  ASSERT_EQ(cd.cofactors.size(), 2u);
  EXPECT_EQ(cd.column_sets[0], std::vector<int>{0});
  EXPECT_EQ(cd.cofactors[0].coeffs(), std::vector<Complex>{-1.0});
  EXPECT_EQ(cd.cofactors[1].coeffs(), (std::vector<Complex>{0.0, 1.0}));
  EXPECT_EQ(cd.delta, 1);
}

GTEST_TEST(CofactorTest, ExpansionMatchesDeterminant) {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    const PolyMatrix dn = canonical_denominator(n);
    std::vector<int> left(n), right(n);
    for (int i = 0; i < n; ++i) {
      left[i] = i;
      right[i] = n + i;
    }
    const PolyMatrix d = dn.select_columns(left);
    const PolyMatrix num = dn.select_columns(right);
    const CharacteristicData cd = characteristic_cofactors(d, num);
    EXPECT_EQ(cd.delta, n * (n + 1) / 2);
    for (int trial = 0; trial < 3; ++trial) {
      const LagrangianPoint p = lagrangian_from_gain(random_gain(n, rng));
      const Poly via_cofactors = characteristic_sum(p.raw_plucker(), cd);
      const Poly direct = closed_loop_charpoly_tf(d, num, p.F1(), p.F2());
      EXPECT_LT(relative_coeff_error(via_cofactors, direct, 1.0), 1e-10);
      const Poly c = chi(p, cd);
      EXPECT_LT(relative_coeff_error(c, direct.unit_max(), 1.0), 1e-10);
    }
  }
}

GTEST_TEST(CofactorTest, HamiltonianChiPrime) {
  Rng rng(4);
  const PolyMatrix dn = canonical_hamiltonian_denominator(2);
  const PolyMatrix d = dn.select_columns({0, 1});
  const PolyMatrix num = dn.select_columns({2, 3});
  const CharacteristicData cd = characteristic_cofactors(d, num);
  const LagrangianPoint p = lagrangian_from_gain(random_gain(2, rng));
  const Poly even = chi_prime(p, cd);
  EXPECT_EQ(even.degree(), 3);
  const Poly full = chi(p, cd);
  EXPECT_LT(relative_coeff_error(even, full.even_part_in_square(), 1.0), 1e-12);
}

GTEST_TEST(CofactorTest, BaseLocusThrows) {
  // D = N = 1 at n = 1: det [[1, 1], [f1, f2]] = f2 - f1 vanishes at [1 1].
  const CharacteristicData cd = characteristic_cofactors(
      PolyMatrix::constant(ComplexMatrix::Identity(1, 1)),
      PolyMatrix::constant(ComplexMatrix::Identity(1, 1)));
  const LagrangianPoint p(ComplexMatrix::Constant(1, 1, Complex(1.0)),
                          ComplexMatrix::Constant(1, 1, Complex(1.0)));
  try {
    chi(p, cd);
    FAIL() << "expected kBaseLocus";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBaseLocus);
  }
}

GTEST_TEST(CofactorTest, SizeLimit) {
  EXPECT_THROW(characteristic_cofactors(canonical_denominator(5).select_columns({0, 1, 2, 3, 4}),
                                        PolyMatrix::constant(ComplexMatrix::Identity(5, 5))),
               Error);
}

GTEST_TEST(DegeneracyTest, DimensionPredicate) {
  EXPECT_EQ(degeneracy_dimension_check(2, 2, false), DegeneracyVerdict::kDegenerate);
  EXPECT_EQ(degeneracy_dimension_check(2, 3, false), DegeneracyVerdict::kPossible);
  EXPECT_EQ(degeneracy_dimension_check(2, 5, true), DegeneracyVerdict::kDegenerate);
  EXPECT_EQ(degeneracy_dimension_check(2, 6, true), DegeneracyVerdict::kPossible);
}

GTEST_TEST(BruhatTest, ComponentwiseOrder) {
  EXPECT_TRUE(bruhat_leq({1, 2, 4}, {3, 5, 6}));
  EXPECT_FALSE(bruhat_leq({3, 5, 6}, {1, 2, 4}));
  EXPECT_FALSE(bruhat_leq({1, 4}, {2, 3}));
  EXPECT_FALSE(bruhat_leq({2, 3}, {1, 4}));
}

GTEST_TEST(CertificateTest, SmallCasesPass) {
  for (int n = 1; n <= 2; ++n) {
    const NondegeneracyCertificate cert = nondegeneracy_certificate_diagonal(n);
    EXPECT_TRUE(cert.pass) << "n = " << n;
    EXPECT_EQ(cert.delta, n * (n + 1) / 2);
    EXPECT_EQ(cert.lagrangian_cells, 1 << n);
    EXPECT_EQ(cert.cells.size(), column_subsets(2 * n, n).size());
  }
}

GTEST_TEST(CertificateTest, ThreeHasComparableCells) {
  // Cells {3,5,6} and {1,2,4} share the cofactor monomial s^3 and are
  // Bruhat-comparable, so the single-coefficient argument does not close.
  const NondegeneracyCertificate cert = nondegeneracy_certificate_diagonal(3);
  EXPECT_EQ(cert.lagrangian_cells, 8);
  EXPECT_FALSE(cert.pass);
  bool found = false;
  for (const CellCertificate& cell : cert.cells) {
    if (cell.pivots == std::vector<int>{3, 5, 6}) {
      found = true;
      EXPECT_TRUE(cell.lagrangian_cell);
      EXPECT_EQ(cell.alpha, 3);
      EXPECT_FALSE(cell.bruhat_isolated);
      EXPECT_FALSE(cell.pass);
    }
  }
  EXPECT_TRUE(found);
}

GTEST_TEST(BaseLocusSearchTest, CanonicalTwoHasNone) {
  const PolyMatrix dn = canonical_denominator(2);
  BaseLocusSearchOptions options;
  options.starts = 40;
  const BaseLocusSearchResult r = base_locus_search(
      2, characteristic_function(dn.select_columns({0, 1}), dn.select_columns({2, 3})), options);
  EXPECT_EQ(r.starts, 40);
  EXPECT_EQ(r.hits, 0);
  EXPECT_GT(r.best_residual, 1e-6);
}

GTEST_TEST(BaseLocusSearchTest, DegenerateSystemHasWitnesses) {
  // delta = 2 < 3 = dim LG(2): the closed loop cannot avoid the base locus.
  Rng rng(5);
  const StateSpace sys{rng.complex_symmetric_matrix(2), rng.complex_normal_matrix(2, 2),
                       ComplexMatrix()};
  const StateSpace full{sys.A, sys.B, sys.B.transpose()};
  BaseLocusSearchOptions options;
  options.starts = 20;
  const BaseLocusSearchResult r = base_locus_search(2, characteristic_function(full), options);
  EXPECT_GT(r.hits, 0);
  for (const ComplexMatrix& w : r.witnesses) {
    const LagrangianPoint p(w.leftCols(2), w.rightCols(2));
    const Poly det = closed_loop_charpoly_ss(full, p.F1(), p.F2());
    EXPECT_LT(det.is_zero() ? 0.0 : det.max_abs_coeff(), 1e-8);
  }
}

}  // namespace
}  // namespace lagplace
