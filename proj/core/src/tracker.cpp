#include <algorithm>
#include <cmath>
#include <numbers>

#include "homotopy.hpp"

namespace lagplace::detail {

namespace {

template <typename Real>
using MatrixOf = typename BasicHomotopy<Real>::Matrix;
template <typename Real>
using VectorOf = typename BasicHomotopy<Real>::Vector;

template <typename Real>
MatrixOf<Real> gain_matrix(const VectorOf<Real>& x, int n, Eigen::Index offset) {
  MatrixOf<Real> f(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      f(i, j) = f(j, i) = x(offset + symmetric_index(n, i, j));
    }
  }
  return f;
}

template <typename Real>
double max_norm(const VectorOf<Real>& v) {
  return v.size() == 0 ? 0.0 : static_cast<double>(v.cwiseAbs().maxCoeff());
}

}  // namespace

template <typename Real>
void BasicHomotopy<Real>::target(const Vector& z, Vector& f, Matrix& jac) const {
  const Scalar x0 = z(0);
  const Matrix m_cl = x0 * A + B * gain_matrix<Real>(z, n, 1) * R;
  const int top = degrees.back();
  std::vector<Matrix> powers{Matrix::Identity(A.rows(), A.cols())};
  for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * m_cl);
  // trace(M^d) and its gradient in z for d = 1..top
  std::vector<Scalar> p(top + 1);
  std::vector<Vector> dp(top + 1, Vector::Zero(m + 1));
  for (int d = 1; d <= top; ++d) {
    const Real dd = static_cast<Real>(d);
    p[d] = powers[d].trace();
    dp[d](0) = dd * (powers[d - 1] * A).trace();
    const Matrix g = R * powers[d - 1] * B;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        dp[d](1 + symmetric_index(n, i, j)) = dd * (i == j ? g(i, i) : g(i, j) + g(j, i));
      }
    }
  }
  f.resize(m);
  jac.resize(m, m + 1);
  for (int k = 0; k < m; ++k) {
    const int d = degrees[k];
    const Scalar x0_dm1 = std::pow(x0, d - 1);
    f(k) = p[d] - power_sums[k] * x0_dm1 * x0;
    jac.row(k) = dp[d].transpose();
    jac(k, 0) -= static_cast<Real>(d) * power_sums[k] * x0_dm1;
  }
}

template <typename Real>
void BasicHomotopy<Real>::start(const Vector& z, Vector& g, Matrix& jac) const {
  g.resize(m);
  jac = Matrix::Zero(m, m + 1);
  for (int k = 0; k < m; ++k) {
    const int d = degrees[k];
    const Real dd = static_cast<Real>(d);
    const Scalar xk = z(k + 1);
    const Scalar xk_dm1 = std::pow(xk, d - 1);
    const Scalar x0_dm1 = std::pow(z(0), d - 1);
    g(k) = xk_dm1 * xk - start_constants[k] * x0_dm1 * z(0);
    jac(k, k + 1) = dd * xk_dm1;
    jac(k, 0) = -dd * start_constants[k] * x0_dm1;
  }
}

template <typename Real>
void BasicHomotopy<Real>::evaluate(const Vector& z, Real t, Vector& h, Matrix& hz,
                                   Vector& ht) const {
  Vector f;
  Vector g;
  Matrix jf;
  Matrix jg;
  target(z, f, jf);
  start(z, g, jg);
  h.resize(m + 1);
  hz.resize(m + 1, m + 1);
  ht.resize(m + 1);
  const Scalar s = Real(1) - t;
  h.head(m) = s * gamma * g + Scalar(t) * f;
  h(m) = chart.dot(z) - Real(1);  // dot conjugates its first argument
  hz.topRows(m) = s * gamma * jg + Scalar(t) * jf;
  hz.row(m) = chart.adjoint();
  ht.head(m) = f - gamma * g;
  ht(m) = Real(0);
}

template <typename Real>
std::uint64_t BasicHomotopy<Real>::path_count() const {
  std::uint64_t count = 1;
  for (int d : degrees) count *= static_cast<std::uint64_t>(d);
  return count;
}

template <typename Real>
typename BasicHomotopy<Real>::Vector BasicHomotopy<Real>::start_point(
    std::uint64_t index) const {
  // Affine start root X_k / x0 = c_k^{1/d_k} exp(2 pi i j_k / d_k).
  Vector ratio(m + 1);
  ratio(0) = Real(1);
  for (int k = 0; k < m; ++k) {
    const auto d = static_cast<std::uint64_t>(degrees[k]);
    const auto j = static_cast<Real>(index % d);
    index /= d;
    const Scalar root = std::pow(start_constants[k], Real(1) / static_cast<Real>(d));
    ratio(k + 1) =
        root * std::polar(Real(1), 2 * std::numbers::pi_v<Real> * j / static_cast<Real>(d));
  }
  return ratio / chart.dot(ratio);
}

namespace {

template <typename Real>
bool tangent(const BasicHomotopy<Real>& hom, const VectorOf<Real>& z, Real t,
             VectorOf<Real>& out) {
  VectorOf<Real> h;
  MatrixOf<Real> hz;
  VectorOf<Real> ht;
  hom.evaluate(z, t, h, hz, ht);
  out = -hz.partialPivLu().solve(ht);
  return out.allFinite();
}

}  // namespace

double x0_decay_rate(const PathResult& path) {
  const auto& d = path.x0_decades;
  if (d.size() < 3 || d.back() <= 0.0 || d[1] <= 0.0) return 0.0;
  // average over the decades after t = 0.99
  return std::log10(d[1] / d.back()) / static_cast<double>(d.size() - 2);
}

template <typename Real>
PathResult track_path(const BasicHomotopy<Real>& hom, const ComplexVector& z0,
                      const SolverConfig& config, double step_scale) {
  using Scalar = std::complex<Real>;
  PathResult result;
  Real t = 0;
  Real step = static_cast<Real>(config.initial_step * step_scale);
  const Real max_step = static_cast<Real>(config.max_step * step_scale);
  int successes = 0;
  VectorOf<Real> z = z0.cast<Scalar>();
  VectorOf<Real> k1, k2, k3, k4;
  VectorOf<Real> h;
  MatrixOf<Real> hz;
  VectorOf<Real> ht;

  while (t < 1) {
    if (result.steps >= config.max_steps_per_path) {
      result.status = PathStatus::kStepLimit;
      break;
    }
    ++result.steps;
    const Real dt = std::min(step, 1 - t);
    const Real t_next = (dt == 1 - t) ? Real(1) : t + dt;
    const Scalar half(dt / 2);
    bool ok = tangent(hom, z, t, k1) &&
              tangent<Real>(hom, z + half * k1, t + dt / 2, k2) &&
              tangent<Real>(hom, z + half * k2, t + dt / 2, k3) &&
              tangent<Real>(hom, z + Scalar(dt) * k3, t_next, k4);
    VectorOf<Real> w;
    if (ok) {
      w = z + Scalar(dt / 6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
      double previous = 0.0;
      ok = false;
      for (int it = 0; it < config.max_corrector_iterations; ++it) {
        hom.evaluate(w, t_next, h, hz, ht);
        const VectorOf<Real> delta = hz.partialPivLu().solve(-h);
        if (!delta.allFinite()) break;
        const double size = max_norm<Real>(delta);
        const double scale = 1.0 + max_norm<Real>(w);
        if (it == 0 && size > config.corrector_trust * scale) break;
        if (it > 0 && size > 0.5 * previous) {
          // Stagnation at the rounding floor of an ill-conditioned
          // Jacobian still counts as converged.
          ok = size <= config.corrector_noise_floor * scale;
          break;
        }
        w += delta;
        previous = size;
        if (size <= config.corrector_tolerance * scale) {
          ok = true;
          break;
        }
      }
    }
    if (ok) {
      z = w;
      t = t_next;
      while (result.x0_decades.size() < 15 &&
             1 - t <= std::pow(Real(10), -static_cast<Real>(result.x0_decades.size() + 1))) {
        result.x0_decades.push_back(static_cast<double>(std::abs(z(0))) / max_norm<Real>(z));
      }
      if (++successes >= config.successes_before_expand) {
        step = std::min(2 * step, max_step);
        successes = 0;
      }
    } else {
      ++result.rejections;
      successes = 0;
      step /= 2;
      if (step < config.min_step) {
        result.status = PathStatus::kUnderflow;
        break;
      }
    }
  }
  result.t = static_cast<double>(t);
  result.z = z.template cast<Complex>();
  return result;
}

template struct BasicHomotopy<double>;
template PathResult track_path(const Homotopy&, const ComplexVector&, const SolverConfig&,
                               double);

}  // namespace lagplace::detail
