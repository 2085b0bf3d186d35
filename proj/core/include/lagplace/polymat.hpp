#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lagplace/types.hpp"

namespace lagplace {

/// Univariate polynomial with complex coefficients stored in ascending
/// degree. The zero polynomial has no stored coefficients and degree -1.
class Poly {
 public:
  /// Coefficients below this fraction of the largest magnitude are trimmed
  /// from the top when normalizing.
  static constexpr double kTrimTolerance = 1e-12;

  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<Complex> coeffs);

  static Poly constant(Complex c);
  static Poly monomial(int degree, Complex c = 1.0);
  /// prod (s - r_i).
  static Poly from_roots(const std::vector<Complex>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// Coefficient of s^k; zero beyond the degree.
  Complex coeff(int k) const;
  Complex leading() const;
  double max_abs_coeff() const;

  Complex operator()(Complex s) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(Complex c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);

  /// Coefficient list padded or truncated to `length` entries.
  std::vector<Complex> padded(int length) const;
  /// Divide by the leading coefficient.
  Poly monic() const;
  /// Divide by the coefficient of largest magnitude (ties: lowest degree).
  Poly unit_max() const;
  /// Substitute s -> s^2 inverse: keep coefficients of even powers only,
  /// returned as a polynomial in u = s^2.
  Poly even_part_in_square() const;
  /// max over k of |c_k| for odd k.
  double odd_part_max() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

Poly operator*(Complex c, const Poly& p);

/// max_k |a_k - b_k| / max(max_k |b_k|, floor).
double relative_coeff_error(const Poly& a, const Poly& b, double floor = 1e-300);

/// Matrix of polynomials; entries row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  /// Constant matrix lifted entrywise.
  static PolyMatrix constant(const ComplexMatrix& m);
  /// Degree-1 matrix a1 * s + a0.
  static PolyMatrix linear(const ComplexMatrix& a1, const ComplexMatrix& a0);
  static PolyMatrix diagonal(const std::vector<Poly>& diag);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Poly& operator()(int r, int c) const { return entries_[index(r, c)]; }
  /// Largest entry degree (the shared degree bound); -1 if all zero.
  int degree_bound() const;

  ComplexMatrix evaluate(Complex s) const;
  /// Stack [top; bottom] (same column count).
  static PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
  /// Juxtapose [left right] (same row count).
  static PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right);
  /// Columns in `cols` (0-based), in the given order.
  PolyMatrix select_columns(const std::vector<int>& cols) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> entries_;
};

/// Largest square polynomial matrix accepted by poly_matrix_det.
inline constexpr int kMaxPolyDetSize = 12;

/// Determinant by division-free expansion over column subsets; every
/// coefficient is formed from products and sums only.
Poly poly_matrix_det(const PolyMatrix& m);

/// det(sI - A), monic of degree size(A), via a unitary Hessenberg reduction
/// followed by the Hessenberg determinant recurrence.
Poly charpoly(const ComplexMatrix& a);

/// All k-element column subsets of {0..cols-1} in lexicographic order.
std::vector<std::vector<int>> column_subsets(int cols, int k);

/// Maximal minors of a k x cols matrix, indexed like column_subsets(cols, k).
std::vector<Complex> full_size_minors(const ComplexMatrix& m, int k);
std::vector<Poly> full_size_minors(const PolyMatrix& m, int k);

/// Scalar determinant by the same division-free expansion (small sizes).
Complex expansion_det(const ComplexMatrix& m);

}  // namespace lagplace
