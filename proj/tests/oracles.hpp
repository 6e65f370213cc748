// Test-only oracles, independent of the library's MPFR path: plain integer
// and rational arithmetic throughout.
#pragma once

#include <vector>

#include <gmpxx.h>

namespace pillai::oracles {

// ln(a/b) with |error| < 10^(5-digits), via the atanh series
// 2 * sum x^(2k+1)/(2k+1) at x = (a-b)/(a+b), evaluated in scaled integers.
mpq_class ln_ratio(const mpz_class& a, const mpz_class& b, int digits);
mpq_class ln_rational(const mpq_class& v, int digits);

// floor(sqrt(m * 10^(2*digits))) / 10^digits: within 10^-digits below the
// true square root.
mpq_class sqrt_approx(const mpz_class& m, int digits);

// (1 + sqrt 5)/2 within 10^-digits.
mpq_class alpha_approx(int digits);

// log(alpha)/log(3) within 10^(8-digits).
mpq_class gamma_approx(int digits);

// Fibonacci by the recurrence.
std::vector<mpz_class> fib_table(long n_max);

// Least t <= 2^l with 3^t == 1 mod 2^l, by scanning.
unsigned long brute_order3_mod_2l(int l);

// Exact 2-adic valuation via the factorization of the value itself.
long nu2_exact(const mpz_class& value);

// Larger root of x = k*(1 + ln(c x)), by long-double bisection.
long double fixed_point_bound(long double k, long double c);

// Plain Euclidean continued-fraction quotients of an exact rational.
std::vector<mpz_class> cf_quotients(mpq_class x, int max_terms);

// ||v|| for an exact rational: distance to the nearest integer.
mpq_class dist_nearest_int_exact(const mpq_class& v);

}  // namespace pillai::oracles
