#include <doctest.h>

#include "oracles.hpp"
#include "pillai/sequences.hpp"

using namespace pillai;

TEST_SUITE_BEGIN("sequences");

TEST_CASE("fib base cases and known values") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(5) == 5);    // (3^4 - 1)/2^4
  CHECK(fib(7) == 13);   // (3^3 - 1)/2
  CHECK(fib(20) == 6765);
  CHECK_THROWS_AS(fib(0), std::invalid_argument);
  CHECK_THROWS_AS(fib(-3), std::invalid_argument);
}

TEST_CASE("fib recurrence holds exactly up to 500") {
  auto table = oracles::fib_table(500);
  for (long n = 3; n <= 500; ++n) {
    CHECK(fib(n) == table[static_cast<size_t>(n)]);
    CHECK(fib(n) == fib(n - 1) + fib(n - 2));
  }
}

TEST_CASE("binet_real recovers exact values") {
  auto check_binet = [](long n, int digits) {
    PrecReal v = binet_real(n, digits);
    CHECK(v.nearest_int() == fib(n));
    PrecReal diff = (v - PrecReal::from_integer(fib(n), digits)).abs();
    PrecReal budget = PrecReal::error_budget(digits, v);
    CHECK(diff.compare(budget) < 0);
  };
  check_binet(10, 50);  // 55
  check_binet(1, 50);
  check_binet(20, 50);  // 6765
  for (long n = 1; n <= 200; ++n) check_binet(n, 80);

  CHECK_THROWS_AS(binet_real(500, 60), PrecisionExhausted);
  CHECK_THROWS_AS(binet_real(0, 50), std::invalid_argument);
}

TEST_CASE("binet bounds alpha^(n-2) <= F(n) <= alpha^(n-1) for n <= 500") {
  const int digits = 60;
  for (long n = 1; n <= 500; ++n) {
    auto lower = [n](int d) { return const_alpha(d).pow_int(n - 2); };
    auto upper = [n](int d) { return const_alpha(d).pow_int(n - 1); };
    auto fn = [n](int d) { return PrecReal::from_integer(fib(n), d); };
    // non-strict bounds: equality holds at n = 1 (right) and n = 2 (left);
    // certify lower <= F via not(F < lower), and F <= upper likewise
    if (n != 2) {
      CHECK(certified_less(lower, fn, digits).verdict);
    } else {
      CHECK_THROWS_AS(certified_less(lower, fn, digits),
                      UndecidableAtPrecision);  // alpha^0 == F(2) == 1
    }
    if (n != 1) {
      CHECK(certified_less(fn, upper, digits).verdict);
    } else {
      CHECK_THROWS_AS(certified_less(fn, upper, digits),
                      UndecidableAtPrecision);  // F(1) == alpha^0 == 1
    }
  }
}

TEST_CASE("valuation of 3^t - 1 matches exact factorization for t <= 64") {
  for (long t = 1; t <= 64; ++t) {
    FactoredPowerDiff f = nu2_pow3_minus1(t);
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), 3u, static_cast<unsigned long>(t));
    value -= 1;
    CHECK(f.valuation == oracles::nu2_exact(value));
    CHECK((f.cofactor << f.valuation) == value);
    CHECK(mpz_odd_p(f.cofactor.get_mpz_t()));
    long expected = (t % 2 == 1) ? 1 : 2 + oracles::nu2_exact(mpz_class(t));
    CHECK(f.valuation == expected);
  }
}

TEST_CASE("valuation examples") {
  FactoredPowerDiff t1 = nu2_pow3_minus1(1);
  CHECK(t1.valuation == 1);
  CHECK(t1.cofactor == 1);
  FactoredPowerDiff t8 = nu2_pow3_minus1(8);  // 6560 = 32 * 205
  CHECK(t8.valuation == 5);
  CHECK(t8.cofactor == 205);
  FactoredPowerDiff t2 = nu2_pow3_minus1(2);  // 8 = 2^3
  CHECK(t2.valuation == 3);
  CHECK(t2.cofactor == 1);
}

TEST_CASE("valuation of 3^t + 1 matches exact factorization for t <= 64") {
  for (long t = 1; t <= 64; ++t) {
    FactoredPowerSum f = nu2_pow3_plus1(t);
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), 3u, static_cast<unsigned long>(t));
    value += 1;
    CHECK(f.valuation == oracles::nu2_exact(value));
    CHECK((f.cofactor << f.valuation) == value);
    CHECK(mpz_odd_p(f.cofactor.get_mpz_t()));
    CHECK(f.valuation == (t % 2 == 1 ? 2 : 1));
  }
}

TEST_CASE("multiplicative order of 3 mod 2^l") {
  CHECK(ord3_mod_2l(3) == 2);   // 3^2 = 9 = 8 + 1
  CHECK(ord3_mod_2l(4) == 4);   // 3^4 = 81 = 5*16 + 1
  CHECK(ord3_mod_2l(10) == 256);
  CHECK(ord3_mod_2l(1) == 1);
  CHECK(ord3_mod_2l(2) == 2);
  CHECK_THROWS_AS(ord3_mod_2l(0), std::invalid_argument);

  for (int l = 1; l <= 20; ++l) {
    mpz_class d = ord3_mod_2l(l);
    CHECK(d == oracles::brute_order3_mod_2l(l));
    // d divides 2^(l-1)
    mpz_class max_order;
    mpz_ui_pow_ui(max_order.get_mpz_t(), 2u,
                  static_cast<unsigned long>(l - 1));
    CHECK(mpz_divisible_p(max_order.get_mpz_t(), d.get_mpz_t()));
  }
}

TEST_CASE("min_x_for_y") {
  CHECK(min_x_for_y(4) == 4);
  CHECK(min_x_for_y(1) == 1);
  CHECK(min_x_for_y(6) == 16);
  // the divisibility it promises, checked exactly
  for (int y = 1; y <= 12; ++y) {
    mpz_class step = min_x_for_y(y);
    mpz_class two_y;
    mpz_ui_pow_ui(two_y.get_mpz_t(), 2u, static_cast<unsigned long>(y));
    for (long x = 1; x <= 120; ++x) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), 3u, static_cast<unsigned long>(x));
      v -= 1;
      bool divides = mpz_divisible_p(v.get_mpz_t(), two_y.get_mpz_t());
      bool multiple = mpz_divisible_p(mpz_class(x).get_mpz_t(),
                                      step.get_mpz_t());
      CHECK(divides == multiple);
    }
  }
}

TEST_CASE("is_fibonacci membership") {
  CHECK(is_fibonacci(13).is_member);
  CHECK(is_fibonacci(13).index == 7);
  CHECK_FALSE(is_fibonacci(4).is_member);
  CHECK(is_fibonacci(6765).is_member);
  CHECK(is_fibonacci(6765).index == 20);
  CHECK(is_fibonacci(1).index == 1);  // smallest index for the repeated 1

  auto table = oracles::fib_table(90);
  for (long n = 1; n <= 90; ++n) {
    FibIndex hit = is_fibonacci(table[static_cast<size_t>(n)]);
    CHECK(hit.is_member);
    if (n != 2) CHECK(hit.index == n);  // F(1) = F(2) reports index 1
  }
  // everything strictly between consecutive members is rejected
  for (long n = 3; n <= 29; ++n) {
    for (mpz_class m = table[static_cast<size_t>(n)] + 1;
         m < table[static_cast<size_t>(n + 1)]; ++m) {
      CHECK_FALSE(is_fibonacci(m).is_member);
    }
  }
  CHECK_THROWS_AS(is_fibonacci(0), std::invalid_argument);
}

TEST_SUITE_END();
