#include "pillai/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace pillai {

mpz_class fib(long n) {
  if (n < 1) throw std::invalid_argument("fib: n must be positive");
  mpz_class a = 1, b = 1;  // F(1), F(2)
  if (n <= 2) return 1;
  for (long i = 3; i <= n; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return b;
}

PrecReal binet_real(long n, int digits) {
  if (n < 1) throw std::invalid_argument("binet_real: n must be positive");
  // F(n) has about n*log10(alpha) digits; the integer must stay resolvable.
  double int_digits = static_cast<double>(n) * 0.20898764024997873;
  if (int_digits + 2 * kGuardDigits >= static_cast<double>(digits)) {
    throw PrecisionExhausted("binet_real: " + std::to_string(digits) +
                             " digits cannot resolve F(" + std::to_string(n) +
                             ")");
  }
  PrecReal alpha = const_alpha(digits);
  PrecReal alpha_n = alpha.pow_int(n);
  PrecReal conj = alpha.pow_int(-n);  // (-alpha)^(-n) = (-1)^n alpha^(-n)
  if (n % 2 != 0) conj = -conj;
  return (alpha_n - conj) / const_sqrt5(digits);
}

namespace {

mpz_class pow3(unsigned long t) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3u, t);
  return p;
}

long nu2_of_long(long t) {
  long v = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++v;
  }
  return v;
}

}  // namespace

FactoredPowerDiff nu2_pow3_minus1(long t) {
  if (t < 1) throw std::invalid_argument("nu2_pow3_minus1: t must be positive");
  long v = (t % 2 == 1) ? 1 : 2 + nu2_of_long(t);
  mpz_class value = pow3(static_cast<unsigned long>(t)) - 1;
  mpz_class cofactor = value >> static_cast<unsigned long>(v);
  if (mpz_even_p(cofactor.get_mpz_t()) || (cofactor << v) != value) {
    throw std::logic_error("valuation closed form violated for 3^t - 1");
  }
  return FactoredPowerDiff{t, v, cofactor};
}

FactoredPowerSum nu2_pow3_plus1(long t) {
  if (t < 1) throw std::invalid_argument("nu2_pow3_plus1: t must be positive");
  long v = (t % 2 == 1) ? 2 : 1;
  mpz_class value = pow3(static_cast<unsigned long>(t)) + 1;
  mpz_class cofactor = value >> static_cast<unsigned long>(v);
  if (mpz_even_p(cofactor.get_mpz_t()) || (cofactor << v) != value) {
    throw std::logic_error("valuation closed form violated for 3^t + 1");
  }
  return FactoredPowerSum{t, v, cofactor};
}

mpz_class ord3_mod_2l(int l) {
  if (l < 1) throw std::invalid_argument("ord3_mod_2l: l must be >= 1");
  if (l == 1) return 1;
  if (l == 2) return 2;
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2u, static_cast<unsigned long>(l - 2));
  return t;
}

mpz_class min_x_for_y(int y) { return ord3_mod_2l(y); }

FibIndex is_fibonacci(const mpz_class& m) {
  if (m < 1) throw std::invalid_argument("is_fibonacci: m must be >= 1");
  mpz_class five_m2 = 5 * m * m;
  mpz_class plus = five_m2 + 4;
  mpz_class minus = five_m2 - 4;
  if (!mpz_perfect_square_p(plus.get_mpz_t()) &&
      !mpz_perfect_square_p(minus.get_mpz_t())) {
    return FibIndex{};
  }
  mpz_class a = 1, b = 1;
  long n = 1;
  while (a < m) {
    mpz_class c = a + b;
    a = b;
    b = c;
    ++n;
  }
  if (a != m) throw std::logic_error("perfect-square test inconsistent");
  return FibIndex{true, n};
}

}  // namespace pillai
