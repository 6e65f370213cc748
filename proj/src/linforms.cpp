#include "pillai/linforms.hpp"

#include <array>
#include <stdexcept>

namespace pillai {

namespace {

PrecReal log_of(CatalogTag tag, int digits) {
  switch (tag) {
    case CatalogTag::kThree:
      return const_log(LogBase::kThree, digits);
    case CatalogTag::kTwo:
      return const_log(LogBase::kTwo, digits);
    case CatalogTag::kSqrt5: {
      PrecReal half = PrecReal::from_ratio(1, 2, digits);
      return half * const_log(LogBase::kFive, digits);
    }
    case CatalogTag::kAlpha:
      return const_log(LogBase::kAlpha, digits);
  }
  throw std::invalid_argument("unknown catalog tag");
}

}  // namespace

PrecReal height(CatalogTag tag, int digits) {
  PrecReal half = PrecReal::from_ratio(1, 2, digits);
  switch (tag) {
    case CatalogTag::kThree:
      return const_log(LogBase::kThree, digits);
    case CatalogTag::kTwo:
      return const_log(LogBase::kTwo, digits);
    case CatalogTag::kSqrt5:
      // minimal polynomial x^2 - 5: h = (log 5)/2
      return half * const_log(LogBase::kFive, digits);
    case CatalogTag::kAlpha:
      // minimal polynomial x^2 - x - 1, conjugate inside the unit circle
      return half * const_log(LogBase::kAlpha, digits);
  }
  throw std::invalid_argument("unknown catalog tag");
}

AlgebraicConstant make_constant(CatalogTag tag, int digits) {
  int degree =
      (tag == CatalogTag::kThree || tag == CatalogTag::kTwo) ? 1 : 2;
  return AlgebraicConstant{tag, degree, height(tag, digits),
                           log_of(tag, digits)};
}

std::vector<PrecReal> a_coefficients(std::span<const CatalogTag> tags,
                                     int field_degree, int digits) {
  if (field_degree < 1) {
    throw std::invalid_argument("field degree must be >= 1");
  }
  PrecReal floor_val = PrecReal::from_decimal("0.16", digits);
  PrecReal dl = PrecReal::from_long(field_degree, digits);
  std::vector<PrecReal> out;
  out.reserve(tags.size());
  for (CatalogTag tag : tags) {
    PrecReal a = dl * height(tag, digits);
    PrecReal lg = log_of(tag, digits).abs();
    if (lg.compare(a) > 0) a = lg;
    if (floor_val.compare(a) > 0) a = floor_val;
    out.push_back(a);
  }
  return out;
}

MatveevInstance paper_instance(int digits) {
  static constexpr std::array<CatalogTag, 4> tags = {
      CatalogTag::kThree, CatalogTag::kSqrt5, CatalogTag::kAlpha,
      CatalogTag::kTwo};
  return MatveevInstance{
      4, 2, PrecReal::from_decimal("1.1", digits),
      a_coefficients(std::span<const CatalogTag>(tags), 2, digits), digits};
}

PrecReal matveev_coefficient(const MatveevInstance& inst) {
  if (inst.num_logs < 1 || inst.field_degree < 1) {
    throw std::invalid_argument("invalid instance");
  }
  if (static_cast<int>(inst.a_coeffs.size()) != inst.num_logs) {
    throw std::invalid_argument("instance needs one A per log");
  }
  const int digits = inst.digits;
  PrecReal n_var = PrecReal::from_long(inst.num_logs, digits);
  PrecReal dl = PrecReal::from_long(inst.field_degree, digits);
  PrecReal one = PrecReal::from_long(1, digits);

  PrecReal c = PrecReal::from_decimal("1.4", digits);
  c = c * PrecReal::from_long(30, digits).pow_int(inst.num_logs + 3);
  // n^4.5 = n^4 * sqrt(n)
  c = c * n_var.pow_int(4) * n_var.sqrt();
  c = c * dl.pow_int(2) * (one + dl.log());
  for (const PrecReal& a : inst.a_coeffs) c = c * a;
  return c;
}

PrecReal combine_with_lambda_bound(const PrecReal& c_matveev) {
  const int digits = c_matveev.digits();
  PrecReal widen = PrecReal::from_decimal("1.5", digits) /
                   PrecReal::from_decimal("1.4", digits);
  return c_matveev * widen / const_log(LogBase::kAlpha, digits);
}

BoundResult solve_n_bound(const PrecReal& k_coeff, const PrecReal& c) {
  if (k_coeff.sign() <= 0 || c.sign() <= 0) {
    throw std::invalid_argument("solve_n_bound: K and c must be positive");
  }
  const int digits = std::max(k_coeff.digits(), c.digits());
  BoundResult result{k_coeff, 0, {}};
  PrecReal one = PrecReal::from_long(1, digits);

  // c*K < 1 means no positive real satisfies x < K(1 + log(c x)).
  if ((c * k_coeff).compare(one) < 0) {
    result.n_bound = 1;
    result.trace.push_back("cK < 1: empty solution set, bound 1");
    return result;
  }

  // Iterates are nondecreasing from N0 = K and converge to the larger
  // fixed point; contraction factor near it is K/N* < 1.
  PrecReal x = k_coeff;
  PrecReal tol = PrecReal::error_budget(digits, x);
  bool converged = false;
  for (int i = 0; i < 200; ++i) {
    PrecReal next = k_coeff * (one + (c * x).log());
    result.trace.push_back(next.to_string(25));
    PrecReal delta = (next - x).abs();
    PrecReal rel_tol = PrecReal::error_budget(digits, next);
    x = next;
    if (delta.compare(rel_tol.compare(tol) > 0 ? rel_tol : tol) <= 0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("solve_n_bound: no convergence in 200 iterations");
  }
  result.n_bound = x.ceil_int();
  if (result.n_bound < 1) result.n_bound = 1;
  return result;
}

int derive_y_bound(const mpz_class& n_bound) {
  if (n_bound < 1) throw std::invalid_argument("derive_y_bound: N must be >= 1");
  mpz_class rhs = 11 * n_bound;  // compare 10 * 2^(y-2) < 11 * N
  int y = 1;                     // y = 1: 2^(-1) < 1.1 N always
  mpz_class lhs = 10;            // 10 * 2^(y-2) at y = 2
  while (lhs < rhs) {
    ++y;
    lhs <<= 1;
  }
  return y;
}

CertifiedBool certify_lambda_nonzero(long x, long y, long n, int digits) {
  // Separates log(3^x / 2^y) from log(alpha^n / sqrt 5); equality of the
  // two sides would make alpha^n / sqrt(5) rational.
  auto lhs = [=](int d) {
    return PrecReal::from_long(x, d) * const_log(LogBase::kThree, d) -
           PrecReal::from_long(y, d) * const_log(LogBase::kTwo, d);
  };
  auto rhs = [=](int d) {
    PrecReal half = PrecReal::from_ratio(1, 2, d);
    return PrecReal::from_long(n, d) * const_log(LogBase::kAlpha, d) -
           half * const_log(LogBase::kFive, d);
  };
  auto diff_abs = [&](int d) { return (lhs(d) - rhs(d)).abs(); };
  auto zero = [](int d) { return PrecReal::from_long(0, d); };
  // budget scales with the magnitudes x log 3 + n log alpha + y log 2
  auto budget = [=](int d) {
    PrecReal scale = PrecReal::from_long(std::abs(x) + std::abs(y) +
                                             std::abs(n) + 1,
                                         d);
    return PrecReal::error_budget(d, scale);
  };
  return certified_less(zero, diff_abs, digits, budget);
}

}  // namespace pillai
