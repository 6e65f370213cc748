#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pillai/numerics.hpp"

namespace pillai {

// Continued-fraction expansion with exact convergents. Only quotients
// certified at the source precision are stored, so trusted_terms always
// equals quotients.size(); exact rational inputs terminate with
// exact_terminated set.
struct ContinuedFraction {
  std::vector<mpz_class> quotients;                      // a0, a1, ...
  std::vector<std::pair<mpz_class, mpz_class>> convergents;  // (p_k, q_k)
  int trusted_terms = 0;
  bool exact_terminated = false;
  int source_digits = 0;  // 0 for exact rational input
};

// Expands x through the Gauss map, tracking the interval
// [x - budget, x + budget] where budget is the contract error of x; a
// quotient is emitted only while both endpoints share the same floor.
// Throws PrecisionExhausted if not even the first quotient is resolvable.
ContinuedFraction cf_expand(const PrecReal& x, int max_terms);

// Exact expansion of a positive rational; always terminates (or stops at
// max_terms) and the final convergent reproduces the input exactly.
ContinuedFraction cf_expand(const mpq_class& x, int max_terms);

// Exact (p_k, q_k); throws std::out_of_range past the trusted range.
std::pair<mpz_class, mpz_class> convergent(const ContinuedFraction& cf, int k);

struct ConvergentHit {
  int k;
  mpz_class p;
  mpz_class q;
};

// Smallest trusted k with q_k > threshold. Throws PrecisionExhausted when
// the trusted expansion runs out below the threshold (the caller should
// re-expand at higher precision; for finite rationals no q above the
// threshold exists at all).
ConvergentHit first_q_above(const ContinuedFraction& cf,
                            const mpz_class& threshold);

}  // namespace pillai
