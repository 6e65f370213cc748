#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pillai/numerics.hpp"

using namespace pillai;

namespace {

PrecReal from_q(const mpq_class& q, int digits) {
  return PrecReal::from_ratio(q.get_num(), q.get_den(), digits);
}

// |a - b| <= 10^(-tol_digits)
void check_close(const PrecReal& a, const mpq_class& b, int tol_digits) {
  PrecReal diff = (a - from_q(b, a.digits() + 10)).abs();
  CHECK(diff.compare(PrecReal::pow10(-tol_digits, a.digits())) <= 0);
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("make_real exact decimal literals") {
  PrecReal one = PrecReal::from_decimal("1", 50);
  CHECK(one.to_rational() == mpq_class(1));

  PrecReal two_five = PrecReal::from_decimal("2.5", 30);
  CHECK(two_five.to_rational() == mpq_class(5, 2));

  PrecReal third = PrecReal::from_ratio(1, 3, 50);
  check_close(third, mpq_class(1, 3), 49);

  CHECK_THROWS_AS(PrecReal::from_decimal("not-a-number", 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(PrecReal::from_decimal("1.2.3", 50), std::invalid_argument);
  CHECK_THROWS_AS(PrecReal::from_decimal("1", 29), std::invalid_argument);
  CHECK_THROWS_AS(PrecReal::from_ratio(1, 0, 50), std::invalid_argument);
}

TEST_CASE("constant catalog against the exact-rational oracle") {
  // frozen reference digits, reproduced by the oracle below
  PrecReal alpha30 = const_alpha(30);
  PrecReal frozen_alpha =
      PrecReal::from_decimal("1.6180339887498948482045868343656", 40);
  CHECK((alpha30 - frozen_alpha).abs().compare(PrecReal::pow10(-28, 40)) < 0);

  PrecReal log3_30 = const_log(LogBase::kThree, 30);
  PrecReal frozen_log3 =
      PrecReal::from_decimal("1.0986122886681096913952452369225", 40);
  CHECK((log3_30 - frozen_log3).abs().compare(PrecReal::pow10(-28, 40)) < 0);

  PrecReal loga_30 = const_log(LogBase::kAlpha, 30);
  PrecReal frozen_loga =
      PrecReal::from_decimal("0.48121182505960344749775891342437", 40);
  CHECK((loga_30 - frozen_loga).abs().compare(PrecReal::pow10(-28, 40)) < 0);

  // oracle reproduces the frozen strings
  check_close(frozen_alpha, oracles::alpha_approx(60), 31);
  check_close(frozen_log3, oracles::ln_ratio(3, 1, 60), 31);

  // the full catalog at 60 digits against the oracle at 80
  check_close(const_alpha(60), oracles::alpha_approx(80), 58);
  check_close(const_sqrt5(60), oracles::sqrt_approx(5, 80), 58);
  check_close(const_log(LogBase::kTwo, 60), oracles::ln_ratio(2, 1, 80), 58);
  check_close(const_log(LogBase::kThree, 60), oracles::ln_ratio(3, 1, 80), 58);
  check_close(const_log(LogBase::kFive, 60), oracles::ln_ratio(5, 1, 80), 58);
  check_close(const_log(LogBase::kAlpha, 60),
              oracles::ln_rational(oracles::alpha_approx(90), 80), 58);
}

TEST_CASE("constant cross-checks") {
  for (int digits : {30, 60, 100}) {
    PrecReal alpha = const_alpha(digits);
    PrecReal lhs = alpha * alpha;
    PrecReal rhs = alpha + PrecReal::from_long(1, digits);
    CHECK((lhs - rhs).abs().compare(
              PrecReal::pow10(-(digits - kGuardDigits), digits)) < 0);

    PrecReal direct = const_log(LogBase::kAlpha, digits);
    PrecReal composed =
        ((PrecReal::from_long(1, digits) + const_sqrt5(digits)) /
         PrecReal::from_long(2, digits))
            .log();
    CHECK((direct - composed)
              .abs()
              .compare(PrecReal::pow10(-(digits - kGuardDigits), digits)) < 0);
  }
}

TEST_CASE("dist_nearest_int basic values") {
  PrecReal d1 = dist_nearest_int(PrecReal::from_decimal("3.25", 60));
  CHECK(d1.to_rational() == mpq_class(1, 4));

  PrecReal d2 = dist_nearest_int(PrecReal::from_decimal("7.0", 60));
  CHECK(d2.to_rational() == 0);

  PrecReal d3 = dist_nearest_int(PrecReal::from_decimal("-2.6", 60));
  check_close(d3, mpq_class(2, 5), 54);
}

TEST_CASE("dist_nearest_int shift and negation invariance") {
  // dyadic inputs are exactly representable, so both identities are exact
  std::mt19937_64 rng(20240811u);
  std::uniform_int_distribution<long> mant(-(1l << 40), 1l << 40);
  std::uniform_int_distribution<int> shift(0, 20);
  std::uniform_int_distribution<long> offset(-50, 50);
  for (int i = 0; i < 200; ++i) {
    mpq_class x(mant(rng), mpz_class(1) << shift(rng));
    x.canonicalize();
    long m = offset(rng);
    PrecReal px = from_q(x, 60);
    PrecReal shifted = px + PrecReal::from_long(m, 60);
    PrecReal negated = -px;
    try {
      PrecReal base = dist_nearest_int(px);
      CHECK(dist_nearest_int(shifted).to_rational() == base.to_rational());
      CHECK(dist_nearest_int(negated).to_rational() == base.to_rational());
      CHECK(base.sign() >= 0);
      CHECK(base.to_rational() <= mpq_class(1, 2));
      CHECK(base.to_rational() ==
            oracles::dist_nearest_int_exact(x));
    } catch (const PrecisionExhausted&) {
      // near-half-integer inputs are legitimately rejected
    }
  }
}

TEST_CASE("dist_nearest_int precision failures") {
  // half-integer within its own error bound
  CHECK_THROWS_AS(dist_nearest_int(PrecReal::from_decimal("3.5", 60)),
                  PrecisionExhausted);
  // integer part consumes nearly all digits
  PrecReal huge = PrecReal::pow10(40, 30) + PrecReal::from_ratio(1, 3, 30);
  CHECK_THROWS_AS(dist_nearest_int(huge), PrecisionExhausted);
}

TEST_CASE("certified_less on plain values") {
  PrecReal a = PrecReal::from_decimal("0.0096", 60);
  PrecReal b = PrecReal::from_decimal("0.0296", 60);
  CertifiedBool r = certified_less(a, b);
  CHECK(r.verdict);
  check_close(r.margin, mpq_class(2, 100), 54);
  CHECK(r.confirmed_at.size() == 2);

  PrecReal one_a = PrecReal::from_decimal("1.0", 60);
  PrecReal one_b = PrecReal::from_decimal("1.0", 60);
  CHECK_THROWS_AS(certified_less(one_a, one_b), UndecidableAtPrecision);

  CHECK(certified_less(const_log(LogBase::kTwo, 50),
                       const_log(LogBase::kThree, 50))
            .verdict);
  CHECK_FALSE(certified_less(const_log(LogBase::kThree, 50),
                             const_log(LogBase::kTwo, 50))
                  .verdict);
}

TEST_CASE("certified_less with re-evaluation") {
  auto log2 = [](int d) { return const_log(LogBase::kTwo, d); };
  auto log3 = [](int d) { return const_log(LogBase::kThree, d); };
  CertifiedBool r = certified_less(log2, log3, 60);
  CHECK(r.verdict);
  CHECK(r.confirmed_at == std::vector<int>{60, 80});

  // margin below the budget is undecidable
  auto one = [](int d) { return PrecReal::from_long(1, d); };
  auto one_plus = [](int d) {
    return PrecReal::from_long(1, d) + PrecReal::pow10(-70, d);
  };
  CHECK_THROWS_AS(certified_less(one, one_plus, 60), UndecidableAtPrecision);

  // evaluations that change with the precision are rejected
  auto unstable = [](int d) {
    return PrecReal::from_long(d == 60 ? 0 : 1, d);
  };
  CHECK_THROWS_AS(certified_less(unstable, one, 60), PrecisionExhausted);
}

TEST_CASE("raising precision never flips a certified verdict") {
  auto gamma = [](int d) {
    return const_log(LogBase::kAlpha, d) / const_log(LogBase::kThree, d);
  };
  auto half = [](int d) { return PrecReal::from_ratio(1, 2, d); };
  bool base = certified_less(gamma, half, 30).verdict;
  for (int digits : {50, 60, 90, 140}) {
    CHECK(certified_less(gamma, half, digits).verdict == base);
  }
}

TEST_CASE("decimal rendering is canonical") {
  CHECK(PrecReal::from_decimal("2.5", 30).to_string(10) == "2.5");
  CHECK(PrecReal::from_long(0, 30).to_string() == "0");
  CHECK(PrecReal::from_long(-7, 30).to_string(5) == "-7");
  CHECK(PrecReal::from_decimal("0.0096", 30).to_string(2) == "0.0096");
  CHECK(PrecReal::pow10(30, 40).to_string(5) == "1e30");
  CHECK(PrecReal::from_decimal("1234.5", 30).to_string(10) == "1234.5");
}

TEST_SUITE_END();
