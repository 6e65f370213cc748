#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace pillai {

// Error model
// -----------
// A PrecReal carries a value to P significant decimal digits (P >= 30).
// Internally each value holds ceil(P*log2(10)) + 32 bits, so every single
// MPFR operation is correctly rounded about 9 decimal digits below the
// requested precision. The documented contract for composite expressions is
// a relative error of at most 10^(-P + kGuardDigits) with kGuardDigits = 5;
// every certified comparison measures its margin against that budget at the
// scale of the operands. Operations involving two precisions produce the
// larger one; precision is never silently reduced.

inline constexpr int kMinDigits = 30;
inline constexpr int kGuardDigits = 5;
inline constexpr int kDualGap = 20;  // second evaluation runs at P + kDualGap

// Raised when a quantity cannot be resolved at the working precision and the
// caller is expected to retry with more digits.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when a certified comparison cannot separate its arguments.
class UndecidableAtPrecision : public std::runtime_error {
 public:
  explicit UndecidableAtPrecision(const std::string& what)
      : std::runtime_error(what) {}
};

// High-precision real number with an explicit decimal-digit precision.
class PrecReal {
 public:
  PrecReal();  // zero at kMinDigits
  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  // Exact decimal literal such as "2.5" or "-0.0096". Throws
  // std::invalid_argument on malformed input or digits < kMinDigits.
  static PrecReal from_decimal(std::string_view literal, int digits);
  static PrecReal from_ratio(const mpz_class& num, const mpz_class& den,
                             int digits);
  static PrecReal from_integer(const mpz_class& value, int digits);
  static PrecReal from_long(long value, int digits);
  // 10^e, exact.
  static PrecReal pow10(long e, int digits);

  int digits() const { return digits_; }

  PrecReal operator-() const;
  friend PrecReal operator+(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator-(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator*(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator/(const PrecReal& a, const PrecReal& b);

  PrecReal abs() const;
  PrecReal sqrt() const;  // domain error if negative
  PrecReal log() const;   // domain error if <= 0
  PrecReal exp() const;
  PrecReal pow_int(long e) const;

  // Raw ordering of the represented binary rationals (no certification).
  int compare(const PrecReal& other) const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  mpz_class floor_int() const;
  mpz_class ceil_int() const;
  // Nearest integer; ties cannot occur for irrational-valued uses, exact
  // .5 ties round to even as in MPFR.
  mpz_class nearest_int() const;

  // Exact value as a binary rational.
  mpq_class to_rational() const;
  double to_double() const;

  // Canonical decimal string with sig_digits significant digits
  // (0 means digits()). Deterministic: fixed notation for moderate
  // exponents, scientific otherwise.
  std::string to_string(int sig_digits = 0) const;

  // Same value re-rounded to a different precision (exact when raising).
  PrecReal round_to(int digits) const;

  // scale * 10^(-digits + kGuardDigits): the contract error budget.
  static PrecReal error_budget(int digits, const PrecReal& scale);

 private:
  explicit PrecReal(int digits);
  static mpfr_prec_t bits_for(int digits);
  friend PrecReal binary_op(const PrecReal&, const PrecReal&,
                            int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr,
                                    mpfr_rnd_t));

  mpfr_t v_;
  int digits_;
};

// Constant catalog. Values are correct to the requested digit count; the
// per-precision results are cached and immutable, safe for concurrent use.
PrecReal const_alpha(int digits);  // (1+sqrt 5)/2
PrecReal const_sqrt5(int digits);

enum class LogBase { kTwo, kThree, kFive, kAlpha };
PrecReal const_log(LogBase base, int digits);  // natural logarithm

// Distance from x to the nearest integer, in [0, 1/2]. Throws
// PrecisionExhausted when the integer part consumes nearly all digits or x
// lies within its own error budget of a half-integer.
PrecReal dist_nearest_int(const PrecReal& x);

struct CertifiedBool {
  bool verdict;
  PrecReal margin;                 // signed b - a at the lower precision
  std::vector<int> confirmed_at;   // decimal precisions used
};

using RealFn = std::function<PrecReal(int digits)>;

// Certify a < b for already-computed values, treated as exact binary
// rationals whose provenance error is the contract budget at the lower of
// the two precisions. Throws UndecidableAtPrecision when the margin does
// not clear the budget.
CertifiedBool certified_less(const PrecReal& a, const PrecReal& b);

// Certify lhs(P) < rhs(P) by evaluating both sides at P and P+kDualGap.
// The two runs must agree within the budget and the margin must clear it;
// disagreement raises PrecisionExhausted, an inseparable margin raises
// UndecidableAtPrecision. `budget` overrides the default
// max(|a|,|b|,1)*10^(-P+kGuardDigits) for expressions whose intermediate
// magnitudes exceed their result (documented at each such call site).
CertifiedBool certified_less(const RealFn& lhs, const RealFn& rhs, int digits);
CertifiedBool certified_less(const RealFn& lhs, const RealFn& rhs, int digits,
                             const RealFn& budget);

}  // namespace pillai
