#include "lagplace/spectral.hpp"

#include <gtest/gtest.h>

#include "lagplace/error.hpp"
#include "lagplace/lagrangian.hpp"
#include "lagplace/random.hpp"
#include "lagplace/solver.hpp"
#include "oracles/oracles.hpp"

namespace lagplace {
namespace {

SymmetricSystem random_symmetric_system(int delta, int n, Rng& rng) {
  return SymmetricSystem(rng.complex_symmetric_matrix(delta), rng.complex_normal_matrix(delta, n));
}

SymmetricGain random_gain(int n, Rng& rng) {
  return SymmetricGain::from_matrix(rng.complex_symmetric_matrix(n));
}

GTEST_TEST(SymmetricGainTest, ParametersAndMatrix) {
  ComplexVector params(3);
  params << 1.0, 2.0, 3.0;
  const SymmetricGain f = SymmetricGain::from_parameters(2, params);
  const ComplexMatrix m = f.matrix();
  EXPECT_EQ(m(0, 0), Complex(1.0));
  EXPECT_EQ(m(1, 1), Complex(2.0));
  EXPECT_EQ(m(0, 1), Complex(3.0));
  EXPECT_EQ(m(1, 0), Complex(3.0));
  EXPECT_EQ(SymmetricGain::from_matrix(m).parameters(), params);

  ComplexMatrix bad = m;
  bad(0, 1) += 1e-6;
  EXPECT_THROW(SymmetricGain::from_matrix(bad), Error);
  EXPECT_LT(asymmetry(SymmetricGain::symmetrized(bad).matrix()), 1e-15);
}

GTEST_TEST(NewtonTest, PowerSumsRoundTrip) {
  Rng rng(1);
  for (int size = 1; size <= 7; ++size) {
    const ComplexMatrix m = rng.complex_normal_matrix(size, size);
    const Poly from_traces = newton_coeffs(trace_powers(m, size));
    EXPECT_LT(oracle::coeff_distance(from_traces.coeffs(), oracle::faddeev_leverrier(m)), 1e-9);
    const TracePowerVector back = power_sums(from_traces, size);
    const TracePowerVector direct = trace_powers(m, size);
    for (int k = 0; k < size; ++k) {
      EXPECT_LT(std::abs(back[k] - direct[k]), 1e-9 * (1.0 + std::abs(direct[k])));
    }
  }
}

GTEST_TEST(PhiMapTest, MatchesCharacteristicPolynomial) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const int delta = symmetric_dimension(n);
    const SymmetricSystem sys = random_symmetric_system(delta, n, rng);
    const SymmetricGain f = random_gain(n, rng);
    const Poly via_traces = newton_coeffs(phi_map(sys, f));
    const Poly direct = charpoly(closed_loop_matrix(sys, f));
    EXPECT_LT(relative_coeff_error(via_traces, direct, 1.0), 1e-8);
  }
}

GTEST_TEST(PhiMapTest, JacobianAtZeroMatchesFiniteDifferences) {
  Rng rng(3);
  const SymmetricSystem sys = random_symmetric_system(3, 2, rng);
  const auto phi = [&](const ComplexVector& x) {
    const TracePowerVector t = phi_map(sys, SymmetricGain::from_parameters(2, x));
    return ComplexVector(Eigen::Map<const ComplexVector>(t.data(), static_cast<Eigen::Index>(t.size())));
  };
  const ComplexMatrix fd = oracle::finite_difference_jacobian(phi, ComplexVector::Zero(3), 1e-5);
  const ComplexMatrix jac = jacobian_phi_at_zero(sys);
  EXPECT_LT(max_abs(jac - fd) / max_abs(fd), 1e-6);
}

GTEST_TEST(PsiMapTest, HamiltonianJacobianAndEvenness) {
  Rng rng(4);
  const auto sys = std::get<HamiltonianSystem>(random_generic_system(2, 6, true, 4));
  const SymmetricGain f = random_gain(2, rng);
  const ComplexMatrix m = closed_loop_matrix(sys, f);
  EXPECT_LT(charpoly(m).odd_part_max(), 1e-9 * charpoly(m).max_abs_coeff());
  const auto psi = [&](const ComplexVector& x) {
    const auto t = psi_map(sys, SymmetricGain::from_parameters(2, x));
    return ComplexVector(Eigen::Map<const ComplexVector>(t.data(), static_cast<Eigen::Index>(t.size())));
  };
  const ComplexMatrix fd = oracle::finite_difference_jacobian(psi, ComplexVector::Zero(3), 1e-5);
  EXPECT_LT(max_abs(jacobian_psi_at_zero(sys) - fd) / max_abs(fd), 1e-6);
}

GTEST_TEST(PsiMapTest, BrokenStructureThrows) {
  const HamiltonianSystem good = hamiltonian_lift(canonical_diagonal_system(2));
  Rng rng(5);
  const HamiltonianSystem broken(good.A() + rng.complex_normal_matrix(6, 6), good.B(), good.C());
  try {
    psi_map(broken, random_gain(2, rng));
    FAIL() << "expected kStructureBroken";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStructureBroken);
  }
}

GTEST_TEST(ClosedLoopTest, StateSpaceDeterminant) {
  Rng rng(6);
  const SymmetricSystem sys = random_symmetric_system(4, 2, rng);
  const SymmetricGain f = random_gain(2, rng);
  const Poly det = closed_loop_charpoly_ss(sys.state_space(), f.matrix(),
                                           ComplexMatrix::Identity(2, 2));
  EXPECT_LT(relative_coeff_error(det, charpoly(closed_loop_matrix(sys, f)), 1.0), 1e-10);
}

GTEST_TEST(ClosedLoopTest, TransferDeterminantScalar) {
  // det [[s, 1], [f, 1]] = s - f: the closed-loop pole of A + BFC at A = 0.
  const PolyMatrix d = PolyMatrix::diagonal({Poly::monomial(1)});
  const PolyMatrix n = PolyMatrix::constant(ComplexMatrix::Identity(1, 1));
  const ComplexMatrix f1 = ComplexMatrix::Constant(1, 1, Complex(2.5));
  const Poly p = closed_loop_charpoly_tf(d, n, f1, ComplexMatrix::Identity(1, 1));
  EXPECT_EQ(p.coeff(0), Complex(-2.5));
  EXPECT_EQ(p.coeff(1), Complex(1.0));
  EXPECT_THROW(closed_loop_charpoly_tf(d, n, ComplexMatrix::Zero(1, 1), ComplexMatrix::Zero(1, 1)),
               Error);
}

GTEST_TEST(ClosedLoopTest, TransferAndStateSpaceAgree) {
  // The canonical diagonal plant in both descriptions.
  Rng rng(7);
  const int n = 2;
  const SymmetricSystem sys = canonical_diagonal_system(n);
  const PolyMatrix dn = canonical_denominator(n);
  const PolyMatrix d = dn.select_columns({0, 1});
  const PolyMatrix num = dn.select_columns({2, 3});
  for (int trial = 0; trial < 5; ++trial) {
    const SymmetricGain f = random_gain(n, rng);
    const Poly tf = closed_loop_charpoly_tf(d, num, f.matrix(), ComplexMatrix::Identity(n, n));
    const Poly ss = charpoly(closed_loop_matrix(sys, f));
    EXPECT_LT(relative_coeff_error(tf, ss, 1.0), 1e-10);
  }
}

GTEST_TEST(ProjectiveTest, CanonicalRepresentative) {
  const ProjectivePoly p = canonical_representative(Poly{2.0, 4.0});
  EXPECT_TRUE(p.normalized);
  EXPECT_EQ(p.poly.coeff(1), Complex(1.0));
  const ProjectivePoly q = canonical_representative(Poly{2.0, 1e-11});
  EXPECT_FALSE(q.normalized);
}

}  // namespace
}  // namespace lagplace
