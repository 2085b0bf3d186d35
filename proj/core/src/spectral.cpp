#include "lagplace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "lagplace/error.hpp"

namespace lagplace {

SymmetricGain::SymmetricGain(int n)
    : n_(n), params_(ComplexVector::Zero(symmetric_dimension(n))) {
  if (n < 1) throw Error(ErrorKind::kDimension, "gain size must be positive");
}

SymmetricGain SymmetricGain::from_matrix(const ComplexMatrix& f) {
  if (f.rows() != f.cols() || f.rows() < 1) {
    throw Error(ErrorKind::kDimension, "gain must be square");
  }
  if (asymmetry(f) > kSymmetryTolerance * std::max(1.0, max_abs(f))) {
    throw Error(ErrorKind::kSymmetry, "gain must be symmetric");
  }
  return symmetrized(f);
}

SymmetricGain SymmetricGain::symmetrized(const ComplexMatrix& f) {
  if (f.rows() != f.cols() || f.rows() < 1) {
    throw Error(ErrorKind::kDimension, "gain must be square");
  }
  const int n = static_cast<int>(f.rows());
  SymmetricGain g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      g.params_(symmetric_index(n, i, j)) = 0.5 * (f(i, j) + f(j, i));
    }
  }
  return g;
}

SymmetricGain SymmetricGain::from_parameters(int n, const ComplexVector& params) {
  SymmetricGain g(n);
  if (params.size() != g.params_.size()) {
    throw Error(ErrorKind::kDimension, "wrong number of gain parameters");
  }
  g.params_ = params;
  return g;
}

ComplexMatrix SymmetricGain::matrix() const {
  ComplexMatrix f(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      f(i, j) = f(j, i) = params_(symmetric_index(n_, i, j));
    }
  }
  return f;
}

namespace {

void check_gain(int inputs, const SymmetricGain& f) {
  if (f.size() != inputs) {
    throw Error(ErrorKind::kDimension, "gain size does not match the input count");
  }
}

}  // namespace

ComplexMatrix closed_loop_matrix(const SymmetricSystem& sys,
                                 const SymmetricGain& f) {
  check_gain(sys.inputs(), f);
  const ComplexMatrix m = sys.A() + sys.B() * f.matrix() * sys.B().transpose();
  return 0.5 * (m + m.transpose());
}

ComplexMatrix closed_loop_matrix(const HamiltonianSystem& sys,
                                 const SymmetricGain& f) {
  check_gain(sys.inputs(), f);
  return sys.A() + sys.B() * f.matrix() * sys.C();
}

TracePowerVector trace_powers(const ComplexMatrix& m, int count) {
  TracePowerVector out;
  out.reserve(count);
  ComplexMatrix power = m;
  for (int k = 1; k <= count; ++k) {
    out.push_back(power.trace());
    if (k < count) power = power * m;
  }
  return out;
}

Poly newton_coeffs(const TracePowerVector& t) {
  const int d = static_cast<int>(t.size());
  if (d < 1) throw Error(ErrorKind::kDimension, "need at least one power sum");
  // alpha[k] is the coefficient of s^{d-k}; alpha[0] = 1.
  std::vector<Complex> alpha(d + 1);
  alpha[0] = 1.0;
  for (int k = 1; k <= d; ++k) {
    Complex acc = t[k - 1];
    for (int i = 1; i < k; ++i) acc += alpha[i] * t[k - 1 - i];
    alpha[k] = -acc / static_cast<double>(k);
  }
  std::vector<Complex> coeffs(alpha.rbegin(), alpha.rend());
  return Poly(std::move(coeffs));
}

TracePowerVector power_sums(const Poly& monic_poly, int count) {
  if (monic_poly.degree() < 1) {
    throw Error(ErrorKind::kDimension, "power sums need a nonconstant polynomial");
  }
  const Poly p = monic_poly.monic();
  const int d = p.degree();
  auto alpha = [&](int k) -> Complex { return k <= d ? p.coeff(d - k) : 0.0; };
  TracePowerVector t(count);
  for (int k = 1; k <= count; ++k) {
    Complex acc = -static_cast<double>(k) * alpha(k);
    for (int i = 1; i < k; ++i) acc -= alpha(i) * t[k - 1 - i];
    t[k - 1] = acc;
  }
  return t;
}

TracePowerVector phi_map(const SymmetricSystem& sys, const SymmetricGain& f) {
  return trace_powers(closed_loop_matrix(sys, f), sys.delta());
}

std::vector<Complex> psi_map(const HamiltonianSystem& sys,
                             const SymmetricGain& f) {
  if (sys.delta() % 2 != 0) {
    throw Error(ErrorKind::kDimension, "psi needs even order");
  }
  const ComplexMatrix m = closed_loop_matrix(sys, f);
  const TracePowerVector t = trace_powers(m, sys.delta());
  const double norm = m.norm();
  std::vector<Complex> out;
  for (int k = 1; k <= sys.delta(); ++k) {
    if (k % 2 == 0) {
      out.push_back(t[k - 1]);
      continue;
    }
    const double scale = std::max(1.0, std::pow(norm, k));
    if (std::abs(t[k - 1]) > kOddTraceFailure * scale) {
      throw Error(ErrorKind::kStructureBroken,
                  "odd trace power of the closed loop does not vanish");
    }
  }
  return out;
}

namespace {

// Column j of the Jacobian needs trace(E_j P) for P = R A^k B.
Complex basis_pairing(const ComplexMatrix& p, int i, int j) {
  return i == j ? p(i, i) : p(i, j) + p(j, i);
}

}  // namespace

ComplexMatrix jacobian_phi_at_zero(const SymmetricSystem& sys) {
  const int d = sys.delta();
  const int n = sys.inputs();
  ComplexMatrix jac(d, symmetric_dimension(n));
  ComplexMatrix akb = sys.B();
  const ComplexMatrix bt = sys.B().transpose();
  for (int k = 1; k <= d; ++k) {
    const ComplexMatrix p = bt * akb;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        jac(k - 1, symmetric_index(n, i, j)) =
            static_cast<double>(k) * basis_pairing(p, i, j);
      }
    }
    akb = sys.A() * akb;
  }
  return jac;
}

ComplexMatrix jacobian_psi_at_zero(const HamiltonianSystem& sys) {
  if (sys.delta() % 2 != 0) {
    throw Error(ErrorKind::kDimension, "psi needs even order");
  }
  const int half = sys.delta() / 2;
  const int n = sys.inputs();
  ComplexMatrix jac(half, symmetric_dimension(n));
  const ComplexMatrix a2 = sys.A() * sys.A();
  ComplexMatrix akb = sys.A() * sys.B();  // A^{2k-1} B
  for (int k = 1; k <= half; ++k) {
    const ComplexMatrix p = sys.C() * akb;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        jac(k - 1, symmetric_index(n, i, j)) =
            static_cast<double>(2 * k) * basis_pairing(p, i, j);
      }
    }
    akb = a2 * akb;
  }
  return jac;
}

namespace {

void check_feedback_pair(const ComplexMatrix& f1, const ComplexMatrix& f2,
                         int rows, int cols1, int cols2) {
  if (f1.rows() != rows || f2.rows() != rows || f1.cols() != cols1 ||
      f2.cols() != cols2) {
    throw Error(ErrorKind::kDimension, "feedback blocks have wrong shape");
  }
  ComplexMatrix w(rows, cols1 + cols2);
  w << f1, f2;
  if (numerical_rank(w) < rows) {
    throw Error(ErrorKind::kInvalidPoint, "[F1 F2] is rank deficient");
  }
}

// Coefficients of a polynomial of degree <= degree from values on a circle.
Poly interpolate_on_circle(int degree, double radius,
                           const std::function<Complex(Complex)>& f) {
  const int m = degree + 1;
  std::vector<Complex> values(m);
  for (int k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / m;
    values[k] = f(radius * std::polar(1.0, angle));
  }
  std::vector<Complex> coeffs(m);
  for (int j = 0; j < m; ++j) {
    Complex acc = 0.0;
    for (int k = 0; k < m; ++k) {
      acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / m);
    }
    coeffs[j] = acc / (static_cast<double>(m) * std::pow(radius, j));
  }
  return Poly(std::move(coeffs));
}

}  // namespace

Poly closed_loop_charpoly_tf(const PolyMatrix& d, const PolyMatrix& n,
                             const ComplexMatrix& f1, const ComplexMatrix& f2) {
  if (d.rows() != d.cols() || n.rows() != d.rows() || n.cols() != d.cols()) {
    throw Error(ErrorKind::kDimension, "D and N must be square of equal size");
  }
  const int size = d.rows();
  check_feedback_pair(f1, f2, size, size, size);
  const PolyMatrix m = PolyMatrix::vstack(
      PolyMatrix::hstack(d, n),
      PolyMatrix::hstack(PolyMatrix::constant(f1), PolyMatrix::constant(f2)));
  return poly_matrix_det(m);
}

Poly closed_loop_charpoly_ss(const StateSpace& sys, const ComplexMatrix& f1,
                             const ComplexMatrix& f2) {
  sys.check_dimensions();
  const int d = sys.delta();
  const int n = sys.inputs();
  check_feedback_pair(f1, f2, n, static_cast<int>(sys.C.rows()), n);
  const auto f2_lu = f2.fullPivLu();
  if (condition_number(f2) < 1e8) {
    // Schur complement on the F2 block.
    const ComplexMatrix closed = sys.A + sys.B * f2_lu.solve(f1 * sys.C);
    return charpoly(closed) * f2_lu.determinant();
  }
  const ComplexMatrix f1c = f1 * sys.C;
  if (d + n <= kMaxPolyDetSize) {
    PolyMatrix top = PolyMatrix::hstack(
        PolyMatrix::linear(ComplexMatrix::Identity(d, d), -sys.A),
        PolyMatrix::constant(sys.B));
    PolyMatrix bottom = PolyMatrix::hstack(PolyMatrix::constant(f1c),
                                           PolyMatrix::constant(f2));
    return poly_matrix_det(PolyMatrix::vstack(top, bottom));
  }
  const double radius = std::max(1.0, max_abs(sys.A));
  return interpolate_on_circle(d, radius, [&](Complex s) {
    ComplexMatrix m(d + n, d + n);
    m << s * ComplexMatrix::Identity(d, d) - sys.A, sys.B, f1c, f2;
    return m.partialPivLu().determinant();
  });
}

ProjectivePoly canonical_representative(const Poly& p) {
  if (!p.is_zero() && std::abs(p.leading()) > 1e-10) {
    return {p.monic(), true};
  }
  return {p, false};
}

}  // namespace lagplace
