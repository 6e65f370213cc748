#pragma once

#include <gmpxx.h>

#include "pillai/numerics.hpp"

namespace pillai {

// Exact n-th Fibonacci number, F(1) = F(2) = 1. Throws on n < 1.
mpz_class fib(long n);

// F(n) evaluated through (alpha^n - (-alpha)^-n)/sqrt(5) at the given
// precision; rounding to the nearest integer recovers fib(n). Throws
// PrecisionExhausted when n is too large for the digit budget.
PrecReal binet_real(long n, int digits);

// 3^t - 1 = 2^valuation * cofactor with the cofactor odd.
struct FactoredPowerDiff {
  long t;
  long valuation;
  mpz_class cofactor;
};

// 3^t + 1 = 2^valuation * cofactor with the cofactor odd.
struct FactoredPowerSum {
  long t;
  long valuation;
  mpz_class cofactor;
};

// Closed-form 2-adic valuation of 3^t - 1: v = 1 for odd t, 2 + v2(t) for
// even t. The cofactor is produced by exact division.
FactoredPowerDiff nu2_pow3_minus1(long t);

// 2-adic valuation of 3^t + 1: v = 2 for odd t, 1 for even t.
FactoredPowerSum nu2_pow3_plus1(long t);

// Least t with 3^t == 1 (mod 2^l): 1 for l = 1, 2 for l = 2, 2^(l-2) for
// l >= 3.
mpz_class ord3_mod_2l(int l);

// Smallest x such that 2^y divides 3^x - 1 (equals ord3_mod_2l(y)).
mpz_class min_x_for_y(int y);

struct FibIndex {
  bool is_member = false;
  long index = 0;  // smallest n with fib(n) == m when is_member
};

// Membership via the 5m^2 +- 4 perfect-square characterization.
FibIndex is_fibonacci(const mpz_class& m);

}  // namespace pillai
