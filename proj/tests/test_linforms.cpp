#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pillai/linforms.hpp"
#include "pillai/sequences.hpp"

using namespace pillai;

namespace {

bool close_to(const PrecReal& v, const std::string& literal, int tol_digits) {
  PrecReal ref = PrecReal::from_decimal(literal, v.digits() + 10);
  return (v - ref).abs().compare(PrecReal::pow10(-tol_digits, v.digits())) < 0;
}

}  // namespace

TEST_SUITE_BEGIN("linforms");

TEST_CASE("catalog heights") {
  CHECK(close_to(height(CatalogTag::kThree, 60),
                 "1.09861228866810969139524523692", 28));
  CHECK(close_to(height(CatalogTag::kSqrt5, 60),
                 "0.80471895621705018730037966661", 28));
  CHECK(close_to(height(CatalogTag::kAlpha, 60),
                 "0.24060591252980172374887945671", 28));
  CHECK(close_to(height(CatalogTag::kTwo, 60),
                 "0.69314718055994530941723212146", 28));
  for (auto tag : {CatalogTag::kThree, CatalogTag::kTwo, CatalogTag::kSqrt5,
                   CatalogTag::kAlpha}) {
    AlgebraicConstant c = make_constant(tag, 60);
    CHECK(c.log_value.sign() > 0);
    CHECK(c.degree == ((tag == CatalogTag::kSqrt5 ||
                        tag == CatalogTag::kAlpha)
                           ? 2
                           : 1));
  }
}

TEST_CASE("a_coefficients reproduce the instance values") {
  const int digits = 60;
  CatalogTag tags[] = {CatalogTag::kThree, CatalogTag::kSqrt5,
                       CatalogTag::kAlpha, CatalogTag::kTwo};
  auto as = a_coefficients(tags, 2, digits);
  REQUIRE(as.size() == 4);
  PrecReal two = PrecReal::from_long(2, digits);
  // 2 log 3, log 5, log alpha, 2 log 2
  CHECK((as[0] - two * const_log(LogBase::kThree, digits)).abs().sign() == 0);
  CHECK((as[1] - const_log(LogBase::kFive, digits)).abs().sign() == 0);
  CHECK((as[2] - const_log(LogBase::kAlpha, digits)).abs().sign() == 0);
  CHECK((as[3] - two * const_log(LogBase::kTwo, digits)).abs().sign() == 0);
  PrecReal floor_val = PrecReal::from_decimal("0.16", digits);
  for (const auto& a : as) CHECK(a.compare(floor_val) >= 0);
}

TEST_CASE("matveev coefficient for the instance") {
  MatveevInstance inst = paper_instance(60);
  PrecReal c = matveev_coefficient(inst);
  // frozen from the independent high-precision product oracle
  CHECK(close_to(c, "250462035720696.8869089461", -1));
}

TEST_CASE("matveev coefficient direct substitution") {
  // n = 1, dL = 1, A = [0.16]: 1.4 * 30^4 * 0.16 = 181440
  MatveevInstance inst{1, 1, PrecReal::from_long(1, 60),
                       {PrecReal::from_decimal("0.16", 60)}, 60};
  PrecReal c = matveev_coefficient(inst);
  PrecReal expected = PrecReal::from_long(181440, 60);
  CHECK((c - expected).abs().compare(PrecReal::pow10(-40, 60)) < 0);
}

TEST_CASE("matveev coefficient scales linearly in each A") {
  MatveevInstance inst = paper_instance(60);
  PrecReal base = matveev_coefficient(inst);
  PrecReal two = PrecReal::from_long(2, 60);
  for (size_t j = 0; j < inst.a_coeffs.size(); ++j) {
    MatveevInstance scaled = inst;
    scaled.a_coeffs[j] = two * scaled.a_coeffs[j];
    PrecReal c = matveev_coefficient(scaled);
    CHECK((c - two * base).abs().compare(
              PrecReal::error_budget(60, c)) <= 0);
  }
}

TEST_CASE("matveev coefficient monotonicity") {
  MatveevInstance inst = paper_instance(60);
  PrecReal base = matveev_coefficient(inst);

  MatveevInstance more_logs = inst;
  more_logs.num_logs += 1;
  more_logs.a_coeffs.push_back(PrecReal::from_long(1, 60));
  CHECK(matveev_coefficient(more_logs).compare(base) > 0);

  MatveevInstance bigger_field = inst;
  bigger_field.field_degree = 3;
  CHECK(matveev_coefficient(bigger_field).compare(base) > 0);

  MatveevInstance bigger_a = inst;
  bigger_a.a_coeffs[1] =
      bigger_a.a_coeffs[1] + PrecReal::from_decimal("0.5", 60);
  CHECK(matveev_coefficient(bigger_a).compare(base) > 0);
}

TEST_CASE("combining with the lambda bound") {
  MatveevInstance inst = paper_instance(60);
  PrecReal c = matveev_coefficient(inst);
  PrecReal k = combine_with_lambda_bound(c);
  CHECK(close_to(k, "557659157889729.0912953002", -1));

  // proportionality
  PrecReal two = PrecReal::from_long(2, 60);
  PrecReal k2 = combine_with_lambda_bound(two * c);
  CHECK((k2 - two * k).abs().compare(PrecReal::error_budget(60, k2)) <= 0);

  // sanity: K * (1 + log(1.1 * 2.16e16)) lands within 1% of 2.16e16
  PrecReal target = PrecReal::from_decimal("2.16e16", 60);
  PrecReal probe =
      k * (PrecReal::from_long(1, 60) +
           (PrecReal::from_decimal("1.1", 60) * target).log());
  PrecReal rel = ((probe - target) / target).abs();
  CHECK(rel.compare(PrecReal::from_decimal("0.01", 60)) < 0);
}

TEST_CASE("solve_n_bound on the instance") {
  MatveevInstance inst = paper_instance(60);
  PrecReal k = combine_with_lambda_bound(matveev_coefficient(inst));
  BoundResult r = solve_n_bound(k, inst.coeff_bound_factor);
  CHECK(r.n_bound == mpz_class("21584797652134203"));
  CHECK_FALSE(r.trace.empty());

  // independent scalar oracle confirms the fixed point
  long double fp = oracles::fixed_point_bound(5.576591578897290913e14L, 1.1L);
  mpz_class oracle_ceil(
      static_cast<long>(std::ceil(static_cast<double>(fp))));
  mpz_class gap = r.n_bound - oracle_ceil;
  CHECK(abs(gap) <= 8);  // double rounding slack on a 17-digit value

  // within 1% of 2.16e16
  mpz_class target("21600000000000000");
  mpz_class err = r.n_bound - target;
  CHECK(100 * abs(err) <= target);
}

TEST_CASE("solve_n_bound degenerate and small cases") {
  PrecReal one = PrecReal::from_long(1, 60);
  BoundResult unit = solve_n_bound(one, one);
  CHECK(unit.n_bound == 1);  // x = 1 + ln x has its only fixed point at 1

  PrecReal ten = PrecReal::from_long(10, 60);
  BoundResult small = solve_n_bound(ten, one);
  long double fp = oracles::fixed_point_bound(10.0L, 1.0L);
  CHECK(std::abs(static_cast<double>(fp) - 48.8972017) < 1e-4);
  CHECK(small.n_bound == 49);  // ceiling of the oracle fixed point

  // below cK = 1 the solution set is empty
  PrecReal half = PrecReal::from_decimal("0.5", 60);
  CHECK(solve_n_bound(half, one).n_bound == 1);

  CHECK_THROWS_AS(solve_n_bound(-one, one), std::invalid_argument);
  CHECK_THROWS_AS(solve_n_bound(one, PrecReal::from_long(0, 60)),
                  std::invalid_argument);
}

TEST_CASE("solve_n_bound tightness") {
  // N >= K(1 + log(cN)) - 1, and enlarging N by 1% overshoots the map
  MatveevInstance inst = paper_instance(60);
  PrecReal k = combine_with_lambda_bound(matveev_coefficient(inst));
  PrecReal c = inst.coeff_bound_factor;
  mpz_class n = solve_n_bound(k, c).n_bound;
  PrecReal nr = PrecReal::from_integer(n, 60);
  PrecReal one = PrecReal::from_long(1, 60);
  PrecReal mapped = k * (one + (c * nr).log());
  CHECK((mapped - (nr - one)).sign() > 0);  // N - 1 < K(1 + log(cN))
  mpz_class enlarged = n + (n + 99) / 100;
  PrecReal er = PrecReal::from_integer(enlarged, 60);
  PrecReal mapped_up = k * (one + (c * er).log());
  CHECK(er.compare(mapped_up) > 0);  // 1.01 N > K(1 + log(1.01 cN))
}

TEST_CASE("derive_y_bound") {
  CHECK(derive_y_bound(mpz_class("21584797652134203")) == 56);
  CHECK(derive_y_bound(mpz_class("21600000000000000")) == 56);
  CHECK(derive_y_bound(4) == 4);  // 2^2 = 4 < 4.4
  CHECK(derive_y_bound(1) == 2);  // 2^0 = 1 < 1.1
  CHECK_THROWS_AS(derive_y_bound(0), std::invalid_argument);
}

TEST_CASE("the linear form is nonzero across the final box") {
  // 3^x 2^-y = alpha^n / sqrt5 is impossible; certify the log separation
  // for every candidate in the box (x restricted to multiples of the
  // minimal exponent, as in the search)
  const int digits = 60;
  for (int y = 4; y <= 56; ++y) {
    mpz_class step = min_x_for_y(y);
    if (step > 111) continue;
    const long step_l = static_cast<long>(step.get_si());
    for (long x = step_l; x <= 111; x += step_l) {
      for (long n = 3; n <= 101; ++n) {
        CHECK(certify_lambda_nonzero(x, y, n, digits).verdict);
      }
    }
  }
}

TEST_SUITE_END();
