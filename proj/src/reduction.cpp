#include "pillai/reduction.hpp"

#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pillai {

ReductionInstance build_instance(int y, const mpz_class& m_bound, int digits) {
  if (y < 0) throw std::invalid_argument("build_instance: y must be >= 0");
  if (m_bound < 1) throw std::invalid_argument("build_instance: M must be >= 1");
  PrecReal log3 = const_log(LogBase::kThree, digits);
  PrecReal log2 = const_log(LogBase::kTwo, digits);
  PrecReal log_sqrt5 = PrecReal::from_ratio(1, 2, digits) *
                       const_log(LogBase::kFive, digits);
  PrecReal gamma = const_log(LogBase::kAlpha, digits) / log3;
  PrecReal mu = (PrecReal::from_long(y, digits) * log2 - log_sqrt5) / log3;
  return ReductionInstance{gamma,
                           mu,
                           m_bound,
                           PrecReal::from_long(5, digits),
                           const_alpha(digits),
                           y,
                           digits};
}

namespace {

struct RawParts {
  PrecReal mu_q_dist;
  PrecReal m_gamma_q_dist;
  PrecReal epsilon;
};

RawParts eval_parts(int y, const mpz_class& m_bound, const mpz_class& q,
                    int digits) {
  ReductionInstance inst = build_instance(y, m_bound, digits);
  PrecReal qr = PrecReal::from_integer(q, digits);
  PrecReal mu_dist = dist_nearest_int(inst.mu * qr);
  PrecReal g_dist = dist_nearest_int(inst.gamma * qr) *
                    PrecReal::from_integer(m_bound, digits);
  return RawParts{mu_dist, g_dist, mu_dist - g_dist};
}

PrecReal eps_budget(const ReductionInstance& inst, const mpz_class& q) {
  // intermediate magnitudes: |mu q| and M * gamma * q
  const int digits = inst.digits;
  PrecReal qr = PrecReal::from_integer(q, digits);
  PrecReal scale = (inst.mu * qr).abs() +
                   inst.gamma * qr * PrecReal::from_integer(inst.m_bound,
                                                            digits) +
                   PrecReal::from_long(1, digits);
  return PrecReal::error_budget(digits, scale);
}

}  // namespace

EpsilonParts epsilon_parts(const ReductionInstance& inst,
                           const mpz_class& q) {
  if (q < 1) throw std::invalid_argument("epsilon_parts: q must be >= 1");
  const int digits = inst.digits;
  RawParts lo = eval_parts(inst.y_label, inst.m_bound, q, digits);
  RawParts hi = eval_parts(inst.y_label, inst.m_bound, q, digits + kDualGap);
  PrecReal budget = eps_budget(inst, q);
  if ((lo.epsilon - hi.epsilon).abs().compare(budget) > 0) {
    throw PrecisionExhausted(
        "epsilon_parts: evaluations at " + std::to_string(digits) + " and " +
        std::to_string(digits + kDualGap) + " digits disagree for y=" +
        std::to_string(inst.y_label));
  }
  return EpsilonParts{hi.mu_q_dist, hi.m_gamma_q_dist, hi.epsilon, budget};
}

PrecReal epsilon_of(const ReductionInstance& inst, const mpz_class& q) {
  return epsilon_parts(inst, q).epsilon;
}

ReductionOutcome reduce_once(const ReductionInstance& inst,
                             const mpz_class& q) {
  if (q <= 6 * inst.m_bound) {
    throw std::invalid_argument("reduce_once: q must exceed 6M");
  }
  ReductionOutcome out;
  out.q_used = q;
  EpsilonParts parts;
  try {
    parts = epsilon_parts(inst, q);
  } catch (const PrecisionExhausted&) {
    out.status = ReductionStatus::kPrecisionExhausted;
    return out;
  }
  out.epsilon = parts.epsilon;
  out.mu_q_dist = parts.mu_q_dist;
  out.m_gamma_q_dist = parts.m_gamma_q_dist;
  if (parts.epsilon.compare(parts.budget) <= 0) {
    // not certifiably positive; the next convergent is the remedy
    out.status = ReductionStatus::kEpsilonNonPositive;
    return out;
  }
  const int digits = inst.digits;
  PrecReal qr = PrecReal::from_integer(q, digits);
  PrecReal ratio =
      (inst.a_coeff * qr / parts.epsilon).log() / inst.b_base.log();
  // conservative floor: round the upper end of the error interval down
  PrecReal guarded = ratio + PrecReal::error_budget(digits, ratio);
  out.omega_bound = static_cast<long>(guarded.floor_int().get_si());
  out.status = ReductionStatus::kOk;
  return out;
}

namespace {

SweepRow sweep_one(int y, const mpz_class& m_bound,
                   const ContinuedFraction& cf, int start_index, int digits) {
  ReductionInstance inst = build_instance(y, m_bound, digits);
  for (int k = start_index; k < cf.trusted_terms; ++k) {
    const mpz_class& q = cf.convergents[static_cast<size_t>(k)].second;
    ReductionOutcome out = reduce_once(inst, q);
    switch (out.status) {
      case ReductionStatus::kOk:
        return SweepRow{y, k, std::move(out)};
      case ReductionStatus::kEpsilonNonPositive:
        continue;  // advance to the next convergent
      case ReductionStatus::kPrecisionExhausted:
        throw PrecisionExhausted("sweep_y: y=" + std::to_string(y) +
                                 " undecidable at " + std::to_string(digits) +
                                 " digits");
    }
  }
  throw PrecisionExhausted("sweep_y: trusted expansion exhausted for y=" +
                           std::to_string(y));
}

}  // namespace

SweepResult sweep_y_serial(int y_min, int y_max, const mpz_class& m_bound,
                           const ContinuedFraction& cf, int digits) {
  if (y_min > y_max) throw std::invalid_argument("sweep_y: empty y range");
  ConvergentHit start = first_q_above(cf, 6 * m_bound);
  SweepResult result;
  result.table.reserve(static_cast<size_t>(y_max - y_min + 1));
  for (int y = y_min; y <= y_max; ++y) {
    result.table.push_back(sweep_one(y, m_bound, cf, start.k, digits));
    result.global_bound =
        std::max(result.global_bound, result.table.back().outcome.omega_bound);
  }
  return result;
}

SweepResult sweep_y(int y_min, int y_max, const mpz_class& m_bound,
                    const ContinuedFraction& cf, int digits) {
  if (y_min > y_max) throw std::invalid_argument("sweep_y: empty y range");
  ConvergentHit start = first_q_above(cf, 6 * m_bound);
  const int count = y_max - y_min + 1;
  std::vector<SweepRow> rows(static_cast<size_t>(count));
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      rows[static_cast<size_t>(i)] =
          sweep_one(y_min + i, m_bound, cf, start.k, digits);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  result.table = std::move(rows);
  for (const SweepRow& row : result.table) {
    result.global_bound = std::max(result.global_bound, row.outcome.omega_bound);
  }
  return result;
}

}  // namespace pillai
