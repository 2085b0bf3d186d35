#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lagplace/solver.hpp"
#include "lagplace/types.hpp"

namespace lagplace::detail {

/// Homogenized power-sum system
///   h_k(x0, X) = trace((x0 A + B F(X) R)^{d_k}) - p_k x0^{d_k}
/// in z = (x0, X) on the affine chart a . z = 1, joined to the start system
///   g_k = X_k^{d_k} - c_k x0^{d_k}
/// by H = (1 - t) gamma g + t h. `Real` selects the working precision.
template <typename Real>
struct BasicHomotopy {
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Matrix A;
  Matrix B;
  Matrix R;
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  std::vector<Scalar> power_sums;
  std::vector<Scalar> start_constants;
  Vector chart;
  Scalar gamma;

  /// Target system value and Jacobian (m x (m+1)).
  void target(const Vector& z, Vector& f, Matrix& jac) const;
  /// Start system value and Jacobian.
  void start(const Vector& z, Vector& g, Matrix& jac) const;
  /// Square system [H; a.z - 1] with its z-Jacobian and t-derivative.
  void evaluate(const Vector& z, Real t, Vector& h, Matrix& hz, Vector& ht) const;

  std::uint64_t path_count() const;
  /// Start point of path `index` (mixed radix over the degrees).
  Vector start_point(std::uint64_t index) const;
};

using Homotopy = BasicHomotopy<double>;

enum class PathStatus { kReachedEnd, kUnderflow, kStepLimit };

struct PathResult {
  PathStatus status = PathStatus::kReachedEnd;
  double t = 0.0;
  ComplexVector z;
  int steps = 0;
  int rejections = 0;
  /// |x0| / |z| when t first passes 1 - 10^-k, k = 1, 2, ...
  std::vector<double> x0_decades;
};

/// Average decay exponent q of |x0| / |z| ~ (1 - t)^q over the decades
/// recorded after t = 0.99; 0 when fewer than three decades were recorded.
double x0_decay_rate(const PathResult& path);

/// Tracks from t = 0 to 1 in the homotopy's precision; the endpoint is
/// rounded to double.
template <typename Real>
PathResult track_path(const BasicHomotopy<Real>& hom, const ComplexVector& z0,
                      const SolverConfig& config, double step_scale);

}  // namespace lagplace::detail
