#include "lagplace/degree.hpp"

#include "lagplace/error.hpp"

namespace lagplace {

namespace {

void check_argument(int n) {
  if (n < 1 || n > kMaxDegreeArgument) {
    throw Error(ErrorKind::kDimension, "degree formulas need 1 <= n <= 20");
  }
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  if (num % den != 0) {
    throw Error(ErrorKind::kFormulaViolation, "degree formula is not integral");
  }
  return num / den;
}

}  // namespace

BigInt degree_factorial_form(int n) {
  check_argument(n);
  BigInt num = BigInt(1) << (n * (n - 1) / 2);
  num *= factorial(n * (n + 1) / 2);
  BigInt den = 1;
  for (int k = 1; k < n; ++k) num *= factorial(k);
  for (int k = 1; k <= n; ++k) den *= factorial(2 * k - 1);
  return exact_quotient(num, den);
}

BigInt degree_odd_power_form(int n) {
  check_argument(n);
  BigInt den = 1;
  for (int i = 0; i < n; ++i) den *= pow(BigInt(2 * i + 1), n - i);
  return exact_quotient(factorial(n * (n + 1) / 2), den);
}

BigInt degree_lagrangian(int n) {
  const BigInt a = degree_factorial_form(n);
  const BigInt b = degree_odd_power_form(n);
  if (a != b) {
    throw Error(ErrorKind::kFormulaViolation, "closed forms of d(n) disagree");
  }
  return a;
}

BigInt degree_spinor(int n) {
  return exact_quotient(degree_lagrangian(n), BigInt(1) << (n * (n - 1) / 2));
}

}  // namespace lagplace
