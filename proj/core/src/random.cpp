#include "lagplace/random.hpp"

#include <cmath>
#include <numbers>

namespace lagplace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::string_view phase,
                std::uint64_t index) {
  // FNV-1a over the phase name
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : phase) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  const std::uint64_t mixed =
      splitmix64(splitmix64(seed) ^ h) ^ splitmix64(index + 0x632be59bd9b4e019ULL);
  return Rng(splitmix64(mixed));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Complex Rng::unit_complex() {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

ComplexMatrix Rng::complex_normal_matrix(int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = complex_normal();
  }
  return m;
}

ComplexMatrix Rng::complex_symmetric_matrix(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = complex_normal();
      m(j, i) = m(i, j);
    }
  }
  return m;
}

}  // namespace lagplace
