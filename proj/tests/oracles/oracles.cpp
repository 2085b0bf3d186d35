#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/SVD>

namespace lagplace::oracle {

std::vector<Complex> det_by_interpolation(const PolyMatrix& m) {
  int bound = 0;
  for (int r = 0; r < m.rows(); ++r) {
    int row_degree = 0;
    for (int c = 0; c < m.cols(); ++c) row_degree = std::max(row_degree, m(r, c).degree());
    bound += row_degree;
  }
  const int points = bound + 1;
  std::vector<Complex> values(points);
  for (int k = 0; k < points; ++k) {
    const Complex s = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    values[k] = m.evaluate(s).determinant();
  }
  std::vector<Complex> coeffs(points);
  for (int j = 0; j < points; ++j) {
    Complex sum = 0.0;
    for (int k = 0; k < points; ++k) {
      sum += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / points);
    }
    coeffs[j] = sum / static_cast<double>(points);
  }
  return coeffs;
}

std::vector<Complex> faddeev_leverrier(const ComplexMatrix& a) {
  const auto n = a.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * ComplexMatrix::Identity(n, n);
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

Complex permutation_det(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

ComplexMatrix finite_difference_jacobian(
    const std::function<ComplexVector(const ComplexVector&)>& f, const ComplexVector& x,
    double h) {
  const ComplexVector f0 = f(x);
  ComplexMatrix jac(f0.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    ComplexVector plus = x;
    ComplexVector minus = x;
    plus(j) += h;
    minus(j) -= h;
    jac.col(j) = (f(plus) - f(minus)) / (2.0 * h);
  }
  return jac;
}

int kalman_rank(const ComplexMatrix& a, const ComplexMatrix& b, double rel_tol) {
  const auto d = a.rows();
  ComplexMatrix k(d, d * b.cols());
  ComplexMatrix block = b;
  for (Eigen::Index i = 0; i < d; ++i) {
    k.middleCols(i * b.cols(), b.cols()) = block;
    block = a * block;
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<ComplexMatrix>(k).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_tol * sv(0)).count());
}

std::uint64_t shifted_staircase_tableaux(int n) {
  // A shifted shape is a strictly decreasing row-length vector; the count
  // of tableaux of a shape is the sum over removable corners.
  std::map<std::vector<int>, std::uint64_t> memo;
  std::function<std::uint64_t(const std::vector<int>&)> count =
      [&](const std::vector<int>& rows) -> std::uint64_t {
    std::vector<int> shape = rows;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      // removing the last cell of row i keeps the rows strictly decreasing
      const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
      if (shape[i] - 1 > below || (shape[i] == 1 && below == 0)) {
        std::vector<int> smaller = shape;
        --smaller[i];
        total += count(smaller);
      }
    }
    memo[shape] = total;
    return total;
  };
  std::vector<int> staircase(n);
  for (int i = 0; i < n; ++i) staircase[i] = n - i;
  return count(staircase);
}

double coeff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t size = std::max(a.size(), b.size());
  double scale = 1.0;
  for (const Complex& c : b) scale = std::max(scale, std::abs(c));
  double worst = 0.0;
  for (std::size_t k = 0; k < size; ++k) {
    const Complex x = k < a.size() ? a[k] : 0.0;
    const Complex y = k < b.size() ? b[k] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst / scale;
}

namespace {

std::vector<int> random_permutation(int d, Rng& rng) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform() * (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Tree on vertices offset..offset+size-1 written into m.
void add_random_tree(ComplexMatrix& m, int offset, int size, Rng& rng) {
  for (int k = 1; k < size; ++k) {
    const int parent = static_cast<int>(rng.uniform() * k);
    const Complex w = rng.complex_normal() + Complex(0.5, 0.0);
    m(offset + k, offset + parent) = m(offset + parent, offset + k) = w;
  }
}

ComplexMatrix permuted(const ComplexMatrix& m, Rng& rng) {
  const std::vector<int> perm = random_permutation(static_cast<int>(m.rows()), rng);
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(perm[i], perm[j]) = m(i, j);
  }
  return out;
}

}  // namespace

ComplexMatrix random_connected_symmetric(int d, int extra_edges, bool zero_diagonal, Rng& rng) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  add_random_tree(m, 0, d, rng);
  for (int e = 0; e < extra_edges && d > 1; ++e) {
    const int i = static_cast<int>(rng.uniform() * d);
    const int j = static_cast<int>(rng.uniform() * d);
    if (i != j) m(i, j) = m(j, i) = rng.complex_normal();
  }
  if (!zero_diagonal) {
    for (int i = 0; i < d; ++i) m(i, i) = rng.complex_normal();
  }
  return permuted(m, rng);
}

ComplexMatrix random_block_symmetric(const std::vector<int>& block_sizes, bool zero_diagonal,
                                     Rng& rng) {
  const int d = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  int offset = 0;
  for (int size : block_sizes) {
    add_random_tree(m, offset, size, rng);
    offset += size;
  }
  if (!zero_diagonal) {
    for (int i = 0; i < d; ++i) m(i, i) = rng.complex_normal();
  }
  return permuted(m, rng);
}

}  // namespace lagplace::oracle
