#include "pillai/contfrac.hpp"

#include <stdexcept>

namespace pillai {

namespace {

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Interval Gauss map on exact rational endpoints lo <= hi. With lo == hi
// the expansion is exact and terminates on a zero remainder.
ContinuedFraction expand_interval(mpq_class lo, mpq_class hi, int max_terms,
                                  int source_digits) {
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  if (hi <= 0) throw std::invalid_argument("cf_expand requires x > 0");

  ContinuedFraction cf;
  cf.source_digits = source_digits;
  mpz_class p_prev2 = 0, p_prev1 = 1;  // p_{-2} = 0, p_{-1} = 1
  mpz_class q_prev2 = 1, q_prev1 = 0;  // q_{-2} = 1, q_{-1} = 0
  const bool exact = (lo == hi);

  for (int k = 0; k < max_terms; ++k) {
    mpz_class a_lo = floor_q(lo);
    mpz_class a_hi = floor_q(hi);
    if (a_lo != a_hi) {
      if (k == 0) {
        throw PrecisionExhausted(
            "cf_expand: first quotient unresolvable at source precision");
      }
      break;  // residual interval spans an integer boundary
    }
    const mpz_class& a = a_lo;
    mpz_class p = a * p_prev1 + p_prev2;
    mpz_class q = a * q_prev1 + q_prev2;
    cf.quotients.push_back(a);
    cf.convergents.emplace_back(p, q);
    p_prev2 = p_prev1;
    p_prev1 = p;
    q_prev2 = q_prev1;
    q_prev1 = q;

    lo -= mpq_class(a);
    hi -= mpq_class(a);
    if (exact) {
      if (lo == 0) {
        cf.exact_terminated = true;
        break;
      }
      mpq_class inv = 1 / lo;
      lo = inv;
      hi = inv;
    } else {
      if (lo <= 0) break;  // remainder interval touches zero
      // reciprocal swaps the endpoints
      mpq_class new_lo = 1 / hi;
      mpq_class new_hi = 1 / lo;
      lo = new_lo;
      hi = new_hi;
    }
  }
  cf.trusted_terms = static_cast<int>(cf.quotients.size());
  return cf;
}

}  // namespace

ContinuedFraction cf_expand(const PrecReal& x, int max_terms) {
  mpq_class center = x.to_rational();
  mpq_class radius =
      PrecReal::error_budget(x.digits(), x).to_rational();
  return expand_interval(center - radius, center + radius, max_terms,
                         x.digits());
}

ContinuedFraction cf_expand(const mpq_class& x, int max_terms) {
  mpq_class v(x);
  v.canonicalize();
  return expand_interval(v, v, max_terms, 0);
}

std::pair<mpz_class, mpz_class> convergent(const ContinuedFraction& cf,
                                           int k) {
  if (k < 0 || k >= cf.trusted_terms) {
    throw std::out_of_range("convergent index " + std::to_string(k) +
                            " beyond trusted range " +
                            std::to_string(cf.trusted_terms));
  }
  return cf.convergents[static_cast<size_t>(k)];
}

ConvergentHit first_q_above(const ContinuedFraction& cf,
                            const mpz_class& threshold) {
  for (int k = 0; k < cf.trusted_terms; ++k) {
    const auto& [p, q] = cf.convergents[static_cast<size_t>(k)];
    if (q > threshold) return ConvergentHit{k, p, q};
  }
  throw PrecisionExhausted(
      cf.exact_terminated
          ? "first_q_above: expansion exhausted (finite rational)"
          : "first_q_above: trusted expansion exhausted below threshold");
}

}  // namespace pillai
