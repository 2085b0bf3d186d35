#include "lagplace/polymat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "lagplace/error.hpp"

namespace lagplace {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  normalize();
}

Poly Poly::constant(Complex c) { return Poly({c}); }

Poly Poly::monomial(int degree, Complex c) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::from_roots(const std::vector<Complex>& roots) {
  Poly p = constant(1.0);
  for (const Complex& r : roots) p = p * Poly({-r, 1.0});
  return p;
}

void Poly::normalize() {
  double largest = 0.0;
  for (const Complex& c : coeffs_) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) {
    coeffs_.clear();
    return;
  }
  const double cutoff = kTrimTolerance * largest;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) {
    coeffs_.pop_back();
  }
}

Complex Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Poly::leading() const {
  return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

double Poly::max_abs_coeff() const {
  double largest = 0.0;
  for (const Complex& c : coeffs_) largest = std::max(largest, std::abs(c));
  return largest;
}

Complex Poly::operator()(Complex s) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(Complex c) const {
  std::vector<Complex> out = coeffs_;
  for (Complex& x : out) x *= c;
  return Poly(std::move(out));
}

Poly operator*(Complex c, const Poly& p) { return p * c; }

Poly Poly::operator-() const { return *this * Complex(-1.0); }

Poly& Poly::operator+=(const Poly& other) { return *this = *this + other; }
Poly& Poly::operator-=(const Poly& other) { return *this = *this - other; }

std::vector<Complex> Poly::padded(int length) const {
  std::vector<Complex> out(static_cast<std::size_t>(length), 0.0);
  for (int k = 0; k < length && k <= degree(); ++k) {
    out[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * (1.0 / leading());
}

Poly Poly::unit_max() const {
  if (is_zero()) return {};
  std::size_t best = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (std::abs(coeffs_[i]) > std::abs(coeffs_[best])) best = i;
  }
  return *this * (1.0 / coeffs_[best]);
}

Poly Poly::even_part_in_square() const {
  std::vector<Complex> out;
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) out.push_back(coeffs_[k]);
  return Poly(std::move(out));
}

double Poly::odd_part_max() const {
  double largest = 0.0;
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    largest = std::max(largest, std::abs(coeffs_[k]));
  }
  return largest;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int k = degree(); k >= 0; --k) {
    const Complex c = coeff(k);
    if (c == 0.0) continue;
    os << (k == degree() ? "" : " + ") << "(" << c.real() << (c.imag() < 0 ? "" : "+")
       << c.imag() << "i)";
    if (k > 0) os << "s^" << k;
  }
  return os.str();
}

double relative_coeff_error(const Poly& a, const Poly& b, double floor) {
  const int len = std::max(a.degree(), b.degree()) + 1;
  double diff = 0.0;
  for (int k = 0; k < len; ++k) diff = std::max(diff, std::abs(a.coeff(k) - b.coeff(k)));
  return diff / std::max(b.max_abs_coeff(), floor);
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorKind::kDimension, "negative PolyMatrix shape");
  }
}

PolyMatrix PolyMatrix::constant(const ComplexMatrix& m) {
  PolyMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) out(r, c) = Poly::constant(m(r, c));
  }
  return out;
}

PolyMatrix PolyMatrix::linear(const ComplexMatrix& a1, const ComplexMatrix& a0) {
  if (a1.rows() != a0.rows() || a1.cols() != a0.cols()) {
    throw Error(ErrorKind::kDimension, "linear PolyMatrix with mismatched parts");
  }
  PolyMatrix out(static_cast<int>(a0.rows()), static_cast<int>(a0.cols()));
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) out(r, c) = Poly({a0(r, c), a1(r, c)});
  }
  return out;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& diag) {
  const int n = static_cast<int>(diag.size());
  PolyMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = diag[static_cast<std::size_t>(i)];
  return out;
}

int PolyMatrix::degree_bound() const {
  int bound = -1;
  for (const Poly& p : entries_) bound = std::max(bound, p.degree());
  return bound;
}

ComplexMatrix PolyMatrix::evaluate(Complex s) const {
  ComplexMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c)(s);
  }
  return out;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorKind::kDimension, "vstack with different column counts");
  }
  PolyMatrix out(top.rows() + bottom.rows(), top.cols());
  for (int r = 0; r < top.rows(); ++r) {
    for (int c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  }
  for (int r = 0; r < bottom.rows(); ++r) {
    for (int c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& left, const PolyMatrix& right) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorKind::kDimension, "hstack with different row counts");
  }
  PolyMatrix out(left.rows(), left.cols() + right.cols());
  for (int r = 0; r < left.rows(); ++r) {
    for (int c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (int c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& cols) const {
  PolyMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, static_cast<int>(c)) = (*this)(r, cols[c]);
    }
  }
  return out;
}

namespace {

constexpr int kMaxSubsetColumns = 24;

bool is_zero_entry(const Complex& c) { return c == 0.0; }
bool is_zero_entry(const Poly& p) { return p.is_zero(); }

// Minors of the leading k rows over every k-column subset, built row by row
// by Laplace expansion along the newest row. Indexed by column bitmask.
template <class T, class Entry>
std::vector<T> subset_minors(int k, int cols, Entry entry, const T& one) {
  if (cols > kMaxSubsetColumns) {
    throw Error(ErrorKind::kScale, "too many columns for subset expansion");
  }
  const std::uint32_t count = 1u << cols;
  std::vector<T> prev(count);
  prev[0] = one;
  for (int r = 0; r < k; ++r) {
    std::vector<T> next(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (std::popcount(mask) != r + 1) continue;
      T acc{};
      int position = 0;
      for (int j = 0; j < cols; ++j) {
        if (!(mask & (1u << j))) continue;
        const auto& a = entry(r, j);
        const T& sub = prev[mask & ~(1u << j)];
        if (!is_zero_entry(a) && !is_zero_entry(sub)) {
          T term = sub * a;
          if ((r + position) % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        ++position;
      }
      next[mask] = std::move(acc);
    }
    prev = std::move(next);
  }
  return prev;
}

std::uint32_t subset_mask(const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int c : subset) mask |= 1u << c;
  return mask;
}

}  // namespace

Poly poly_matrix_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimension, "determinant of a non-square PolyMatrix");
  }
  if (m.rows() > kMaxPolyDetSize) {
    throw Error(ErrorKind::kScale, "PolyMatrix determinant limited to size 12");
  }
  if (m.rows() == 0) return Poly::constant(1.0);
  const auto minors = subset_minors<Poly>(
      m.rows(), m.cols(), [&](int r, int c) -> const Poly& { return m(r, c); },
      Poly::constant(1.0));
  return minors[(1u << m.cols()) - 1];
}

Complex expansion_det(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimension, "determinant of a non-square matrix");
  }
  if (m.rows() == 0) return 1.0;
  const int n = static_cast<int>(m.rows());
  const auto minors = subset_minors<Complex>(
      n, n, [&](int r, int c) { return m(r, c); }, Complex(1.0));
  return minors[(1u << n) - 1];
}

Poly charpoly(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kDimension, "characteristic polynomial of a non-square matrix");
  }
  const int m = static_cast<int>(a.rows());
  if (m == 0) return Poly::constant(1.0);
  ComplexMatrix h = a;
  if (m > 2) {
    Eigen::HessenbergDecomposition<ComplexMatrix> hd(a);
    h = hd.matrixH();
  }
  // p[k] = det(sI - H[0..k, 0..k])
  std::vector<Poly> p;
  p.reserve(static_cast<std::size_t>(m) + 1);
  p.push_back(Poly::constant(1.0));
  for (int k = 0; k < m; ++k) {
    Poly next = Poly({-h(k, k), 1.0}) * p[static_cast<std::size_t>(k)];
    Complex chain = 1.0;
    for (int i = k - 1; i >= 0; --i) {
      chain *= h(i + 1, i);
      if (chain == 0.0) break;
      next -= p[static_cast<std::size_t>(i)] * (h(i, k) * chain);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

std::vector<std::vector<int>> column_subsets(int cols, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > cols) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == cols - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<Complex> full_size_minors(const ComplexMatrix& m, int k) {
  if (k != m.rows() || m.cols() < k) {
    throw Error(ErrorKind::kDimension, "maximal minors need k = rows <= cols");
  }
  const int cols = static_cast<int>(m.cols());
  const auto by_mask = subset_minors<Complex>(
      k, cols, [&](int r, int c) { return m(r, c); }, Complex(1.0));
  std::vector<Complex> out;
  for (const auto& subset : column_subsets(cols, k)) {
    out.push_back(by_mask[subset_mask(subset)]);
  }
  return out;
}

std::vector<Poly> full_size_minors(const PolyMatrix& m, int k) {
  if (k != m.rows() || m.cols() < k) {
    throw Error(ErrorKind::kDimension, "maximal minors need k = rows <= cols");
  }
  const auto by_mask = subset_minors<Poly>(
      k, m.cols(), [&](int r, int c) -> const Poly& { return m(r, c); },
      Poly::constant(1.0));
  std::vector<Poly> out;
  for (const auto& subset : column_subsets(m.cols(), k)) {
    out.push_back(by_mask[subset_mask(subset)]);
  }
  return out;
}

}  // namespace lagplace
