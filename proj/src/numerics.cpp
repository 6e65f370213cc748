#include "pillai/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <utility>

namespace pillai {

namespace {

void check_digits(int digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least " +
                                std::to_string(kMinDigits) + " digits, got " +
                                std::to_string(digits));
  }
}

}  // namespace

mpfr_prec_t PrecReal::bits_for(int digits) {
  check_digits(digits);
  return static_cast<mpfr_prec_t>(
             std::ceil(static_cast<double>(digits) * 3.321928094887363)) +
         32;
}

PrecReal::PrecReal() : digits_(kMinDigits) {
  mpfr_init2(v_, bits_for(kMinDigits));
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(const PrecReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    digits_ = other.digits_;
  }
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::from_decimal(std::string_view literal, int digits) {
  check_digits(digits);
  PrecReal r(digits);
  std::string s(literal);
  if (s.empty()) throw std::invalid_argument("empty decimal literal");
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 &&
      mpfr_nan_p(r.v_)) {
    throw std::invalid_argument("malformed decimal literal: " + s);
  }
  // mpfr_set_str returns nonzero for inexact too; reject only parse failure.
  if (mpfr_nan_p(r.v_)) {
    throw std::invalid_argument("malformed decimal literal: " + s);
  }
  {
    // mpfr_set_str accepts partial prefixes through strtofr only when the
    // whole string parses; re-validate by round-trip check of the tail.
    mpfr_t probe;
    mpfr_init2(probe, 64);
    char* end = nullptr;
    mpfr_strtofr(probe, s.c_str(), &end, 10, MPFR_RNDN);
    bool full = (end != nullptr && *end == '\0' && end != s.c_str());
    mpfr_clear(probe);
    if (!full) throw std::invalid_argument("malformed decimal literal: " + s);
  }
  return r;
}

PrecReal PrecReal::from_ratio(const mpz_class& num, const mpz_class& den,
                              int digits) {
  check_digits(digits);
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  PrecReal r(digits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_integer(const mpz_class& value, int digits) {
  check_digits(digits);
  PrecReal r(digits);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_long(long value, int digits) {
  check_digits(digits);
  PrecReal r(digits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::pow10(long e, int digits) {
  check_digits(digits);
  PrecReal r(digits);
  mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e >= 0 ? e : -e),
                 MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.v_, 1u, r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::operator-() const {
  PrecReal r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal binary_op(const PrecReal& a, const PrecReal& b,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  PrecReal r(std::max(a.digits_, b.digits_));
  op(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

PrecReal operator+(const PrecReal& a, const PrecReal& b) {
  return binary_op(a, b, mpfr_add);
}
PrecReal operator-(const PrecReal& a, const PrecReal& b) {
  return binary_op(a, b, mpfr_sub);
}
PrecReal operator*(const PrecReal& a, const PrecReal& b) {
  return binary_op(a, b, mpfr_mul);
}
PrecReal operator/(const PrecReal& a, const PrecReal& b) {
  if (mpfr_zero_p(b.v_)) throw std::domain_error("division by zero");
  return binary_op(a, b, mpfr_div);
}

PrecReal PrecReal::abs() const {
  PrecReal r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::sqrt() const {
  if (mpfr_sgn(v_) < 0) throw std::domain_error("sqrt of negative value");
  PrecReal r(digits_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::log() const {
  if (mpfr_sgn(v_) <= 0) throw std::domain_error("log of non-positive value");
  PrecReal r(digits_);
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::exp() const {
  PrecReal r(digits_);
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::pow_int(long e) const {
  PrecReal r(digits_);
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

int PrecReal::compare(const PrecReal& other) const {
  return mpfr_cmp(v_, other.v_);
}

int PrecReal::sign() const { return mpfr_sgn(v_); }

mpz_class PrecReal::floor_int() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

mpz_class PrecReal::ceil_int() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}

mpz_class PrecReal::nearest_int() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

mpq_class PrecReal::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite value");
  if (mpfr_zero_p(v_)) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  mpq_class q(mant);
  mpz_class two_e;
  mpz_ui_pow_ui(two_e.get_mpz_t(), 2u,
                static_cast<unsigned long>(e >= 0 ? e : -e));
  if (e >= 0) {
    q *= mpq_class(two_e);
  } else {
    q /= mpq_class(two_e);
  }
  q.canonicalize();
  return q;
}

double PrecReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string PrecReal::to_string(int sig_digits) const {
  if (sig_digits <= 0) sig_digits = digits_;
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return "nan";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10,
                           static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  // strip trailing zeros but keep at least one digit
  size_t last = mant.find_last_not_of('0');
  mant.erase(std::min(mant.size(), last + 1));
  if (mant.empty()) mant = "0";

  std::string out;
  // value = 0.mant * 10^exp10
  if (exp10 >= 1 && exp10 <= 21 &&
      static_cast<size_t>(exp10) >= mant.size()) {
    out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
  } else if (exp10 >= 1 && exp10 <= 21) {
    out = mant.substr(0, static_cast<size_t>(exp10)) + "." +
          mant.substr(static_cast<size_t>(exp10));
  } else if (exp10 <= 0 && exp10 > -6) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10 - 1));
  }
  return neg ? "-" + out : out;
}

PrecReal PrecReal::round_to(int digits) const {
  check_digits(digits);
  PrecReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::error_budget(int digits, const PrecReal& scale) {
  PrecReal one = PrecReal::from_long(1, digits);
  PrecReal s = scale.abs();
  if (s.compare(one) < 0) s = one;
  return s * pow10(-(digits - kGuardDigits), digits);
}

// --- constant catalog ---------------------------------------------------

namespace {

enum class ConstKind { kAlpha, kSqrt5, kLog2, kLog3, kLog5, kLogAlpha };

PrecReal compute_const(ConstKind kind, int digits) {
  switch (kind) {
    case ConstKind::kAlpha: {
      PrecReal five = PrecReal::from_long(5, digits);
      PrecReal one = PrecReal::from_long(1, digits);
      PrecReal two = PrecReal::from_long(2, digits);
      return (one + five.sqrt()) / two;
    }
    case ConstKind::kSqrt5:
      return PrecReal::from_long(5, digits).sqrt();
    case ConstKind::kLog2:
      return PrecReal::from_long(2, digits).log();
    case ConstKind::kLog3:
      return PrecReal::from_long(3, digits).log();
    case ConstKind::kLog5:
      return PrecReal::from_long(5, digits).log();
    case ConstKind::kLogAlpha:
      return compute_const(ConstKind::kAlpha, digits).log();
  }
  throw std::logic_error("unreachable");
}

PrecReal catalog(ConstKind kind, int digits) {
  check_digits(digits);
  static std::mutex mu;
  static std::map<std::pair<ConstKind, int>, PrecReal> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kind, digits);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, compute_const(kind, digits)).first;
  }
  return it->second;
}

}  // namespace

PrecReal const_alpha(int digits) { return catalog(ConstKind::kAlpha, digits); }
PrecReal const_sqrt5(int digits) { return catalog(ConstKind::kSqrt5, digits); }

PrecReal const_log(LogBase base, int digits) {
  switch (base) {
    case LogBase::kTwo:
      return catalog(ConstKind::kLog2, digits);
    case LogBase::kThree:
      return catalog(ConstKind::kLog3, digits);
    case LogBase::kFive:
      return catalog(ConstKind::kLog5, digits);
    case LogBase::kAlpha:
      return catalog(ConstKind::kLogAlpha, digits);
  }
  throw std::invalid_argument("unknown log base");
}

// --- nearest-integer distance -------------------------------------------

PrecReal dist_nearest_int(const PrecReal& x) {
  const int digits = x.digits();
  PrecReal scale = x.abs();
  PrecReal budget = PrecReal::error_budget(digits, scale);
  PrecReal quarter = PrecReal::from_ratio(1, 4, digits);
  if (budget.compare(quarter) >= 0) {
    throw PrecisionExhausted(
        "integer part consumes nearly all digits in dist_nearest_int");
  }
  mpz_class m = x.nearest_int();
  PrecReal d = (x - PrecReal::from_integer(m, digits)).abs();
  // ambiguity: within error budget of a half-integer
  PrecReal half = PrecReal::from_ratio(1, 2, digits);
  if ((half - d).abs().compare(budget) <= 0) {
    throw PrecisionExhausted(
        "value within error budget of a half-integer in dist_nearest_int");
  }
  return d;
}

// --- certified comparison -------------------------------------------------

namespace {

PrecReal default_budget(const PrecReal& a, const PrecReal& b, int digits) {
  PrecReal scale = a.abs();
  if (b.abs().compare(scale) > 0) scale = b.abs();
  return PrecReal::error_budget(digits, scale);
}

}  // namespace

CertifiedBool certified_less(const PrecReal& a, const PrecReal& b) {
  const int digits = std::min(a.digits(), b.digits());
  PrecReal margin = b - a;
  PrecReal budget = default_budget(a, b, digits);
  if (margin.abs().compare(budget) <= 0) {
    throw UndecidableAtPrecision(
        "certified_less: margin " + margin.to_string(6) +
        " does not clear the error budget " + budget.to_string(6) + " at " +
        std::to_string(digits) + " digits");
  }
  // The inputs are exact binary rationals; re-evaluating the comparison at
  // digits + kDualGap is the identical exact comparison.
  return CertifiedBool{margin.sign() > 0, margin, {digits, digits + kDualGap}};
}

CertifiedBool certified_less(const RealFn& lhs, const RealFn& rhs,
                             int digits) {
  return certified_less(lhs, rhs, digits, RealFn{});
}

CertifiedBool certified_less(const RealFn& lhs, const RealFn& rhs, int digits,
                             const RealFn& budget_fn) {
  check_digits(digits);
  const int hi = digits + kDualGap;
  PrecReal a1 = lhs(digits), b1 = rhs(digits);
  PrecReal a2 = lhs(hi), b2 = rhs(hi);
  PrecReal m1 = b1 - a1;
  PrecReal m2 = b2 - a2;
  PrecReal budget =
      budget_fn ? budget_fn(digits) : default_budget(a1, b1, digits);
  if ((m1 - m2).abs().compare(budget) > 0) {
    throw PrecisionExhausted(
        "certified_less: evaluations at " + std::to_string(digits) + " and " +
        std::to_string(hi) + " digits disagree beyond the budget");
  }
  if (m1.abs().compare(budget) <= 0 || m2.abs().compare(budget) <= 0 ||
      m1.sign() != m2.sign()) {
    throw UndecidableAtPrecision(
        "certified_less: margin does not clear the error budget at " +
        std::to_string(digits) + " digits");
  }
  return CertifiedBool{m1.sign() > 0, m1, {digits, hi}};
}

}  // namespace pillai
