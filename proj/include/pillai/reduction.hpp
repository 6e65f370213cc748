#pragma once

#include <vector>

#include <gmpxx.h>

#include "pillai/contfrac.hpp"
#include "pillai/numerics.hpp"

namespace pillai {

// One application of the reduction lemma: bounds omega whenever
// 0 < |u*gamma - v + mu| < A * B^-omega has a solution with u <= M, given a
// convergent denominator q > 6M of gamma with eps = ||mu q|| - M ||gamma q||
// positive.
struct ReductionInstance {
  PrecReal gamma;  // log(alpha)/log(3)
  PrecReal mu;     // (y log 2 - log sqrt 5)/log 3
  mpz_class m_bound;
  PrecReal a_coeff;  // 5
  PrecReal b_base;   // alpha
  int y_label;
  int digits;
};

ReductionInstance build_instance(int y, const mpz_class& m_bound, int digits);

// The two distances entering eps, certified by agreement of evaluations at
// digits and digits + kDualGap. The documented error budget of eps at P
// digits is (|mu q| + M*gamma*q + 1) * 10^(-P + kGuardDigits).
struct EpsilonParts {
  PrecReal mu_q_dist;        // ||mu q||
  PrecReal m_gamma_q_dist;   // M * ||gamma q||
  PrecReal epsilon;          // difference, at the higher precision
  PrecReal budget;           // certification budget at the lower precision
};

EpsilonParts epsilon_parts(const ReductionInstance& inst, const mpz_class& q);

// ||mu q|| - M ||gamma q||; throws PrecisionExhausted when the two
// evaluations disagree beyond the budget.
PrecReal epsilon_of(const ReductionInstance& inst, const mpz_class& q);

enum class ReductionStatus { kOk, kEpsilonNonPositive, kPrecisionExhausted };

struct ReductionOutcome {
  mpz_class q_used;
  PrecReal epsilon;
  PrecReal mu_q_dist;
  PrecReal m_gamma_q_dist;
  long omega_bound = 0;  // floor(log(A q / eps) / log B) when status == kOk
  ReductionStatus status = ReductionStatus::kPrecisionExhausted;
};

// Requires q > 6M. Status kOk certifies eps > 0 and any (u, v, omega)
// solution with u <= M has omega <= omega_bound.
ReductionOutcome reduce_once(const ReductionInstance& inst,
                             const mpz_class& q);

struct SweepRow {
  int y;
  int convergent_index;
  ReductionOutcome outcome;
};

struct SweepResult {
  long global_bound = 0;  // max omega_bound across y
  std::vector<SweepRow> table;
};

// For each y in [y_min, y_max]: builds the instance, starts from the first
// trusted convergent with q > 6M and advances to the next convergent when
// eps cannot be certified positive. Rows are ordered by y and independent
// of scheduling. The _serial variant is the reference implementation; the
// default runs the y slices under OpenMP.
SweepResult sweep_y(int y_min, int y_max, const mpz_class& m_bound,
                    const ContinuedFraction& cf, int digits);
SweepResult sweep_y_serial(int y_min, int y_max, const mpz_class& m_bound,
                           const ContinuedFraction& cf, int digits);

}  // namespace pillai
