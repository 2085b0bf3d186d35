#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lagplace {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxDegreeArgument = 20;

/// Degree d(n) of LG(n): number of complex symmetric gains placing the poles
/// of a generic square problem. Both closed forms are evaluated exactly and
/// must agree (kFormulaViolation otherwise). Requires 1 <= n <= 20.
BigInt degree_lagrangian(int n);

/// First closed form: 2^C(n,2) (C(n+1,2))! 1! 2! ... (n-1)! / (1! 3! ... (2n-1)!).
BigInt degree_factorial_form(int n);
/// Second closed form: (C(n+1,2))! / prod_{i=0}^{n-1} (2i+1)^(n-i).
BigInt degree_odd_power_form(int n);

/// d(n) / 2^C(n,2), the degree of the spinor variety.
BigInt degree_spinor(int n);

}  // namespace lagplace
