#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lagplace/types.hpp"

namespace lagplace {

/// Deterministic generator used for every randomized step. Streams are
/// derived from a root seed and a phase name, so the draws of one phase do
/// not depend on how many numbers another phase consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for `phase` under `seed`; `index` separates repeated phases
  /// (census trial k, path k, ...).
  static Rng derive(std::uint64_t seed, std::string_view phase,
                    std::uint64_t index = 0);

  std::uint64_t next_u64() { return engine_(); }
  double uniform();          // [0, 1)
  double normal();           // N(0, 1), Box-Muller
  Complex complex_normal();  // real and imaginary parts N(0, 1/2)
  Complex unit_complex();    // uniform on the unit circle

  ComplexMatrix complex_normal_matrix(int rows, int cols);
  ComplexMatrix complex_symmetric_matrix(int n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace lagplace
