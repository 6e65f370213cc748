#include "pillai/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "pillai/linforms.hpp"
#include "pillai/reduction.hpp"

namespace pillai {

namespace {

constexpr int kEscalationStep = 40;
constexpr int kMaxEscalations = 4;

template <typename Fn>
auto with_escalation(int digits, Fn&& fn) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn(digits + attempt * kEscalationStep);
    } catch (const PrecisionExhausted&) {
      if (attempt == kMaxEscalations) throw;
    }
  }
}

ScanRecord run_scan(const std::string& name, SpecialCase which, long x_max,
                    long n_max) {
  return ScanRecord{name, x_max, n_max,
                    scan_special_case(which, x_max, n_max)};
}

ReductionRow to_row(const SweepRow& row) {
  return ReductionRow{row.y,
                      row.convergent_index,
                      row.outcome.q_used,
                      row.outcome.mu_q_dist.to_string(30),
                      row.outcome.m_gamma_q_dist.to_string(30),
                      row.outcome.epsilon.to_string(30),
                      row.outcome.omega_bound};
}

std::string min_epsilon_of(const std::vector<ReductionRow>& rows,
                           int digits) {
  if (rows.empty()) return "0";
  PrecReal best = PrecReal::from_decimal(rows.front().epsilon, digits);
  for (const auto& r : rows) {
    PrecReal e = PrecReal::from_decimal(r.epsilon, digits);
    if (e.compare(best) < 0) best = e;
  }
  return best.to_string(30);
}

}  // namespace

ProofCertificate run_proof(const PipelineConfig& config) {
  if (config.precision_digits < kMinDigits) {
    throw std::invalid_argument("precision_digits must be >= " +
                                std::to_string(kMinDigits));
  }
  ProofCertificate cert;
  cert.library_version = kLibraryVersion;
  cert.lib_gmp = gmp_version;
  cert.lib_mpfr = mpfr_get_version();
  cert.precision_digits = config.precision_digits;
  cert.max_cf_terms = config.max_cf_terms;
  cert.n_max_floor = config.n_max_floor;
  cert.emit_trace = config.emit_trace;

  // stage 1: the y <= 3 cases and the F_n = 1 case, finite windows
  cert.preliminary.odd_exponent = rule_out_odd_exponent_cases(64);
  cert.preliminary.scans = {
      run_scan("1.3", SpecialCase::kHalfDiff, 120, 300),
      run_scan("1.4", SpecialCase::kQuarterNinePow, 120, 300),
      run_scan("1.5", SpecialCase::kEighthNinePow, 120, 300),
      run_scan("herschfeld", SpecialCase::kPurePower, 120, 300),
  };

  // stage 2: lower-bound chain
  const int p2 = config.precision_digits;
  MatveevInstance inst = paper_instance(p2);
  PrecReal c_matveev = matveev_coefficient(inst);
  PrecReal k_coeff = combine_with_lambda_bound(c_matveev);
  BoundResult bound = solve_n_bound(k_coeff, inst.coeff_bound_factor);
  cert.matveev.precision_digits = p2;
  cert.matveev.num_logs = inst.num_logs;
  cert.matveev.field_degree = inst.field_degree;
  cert.matveev.coeff_bound_factor = inst.coeff_bound_factor.to_string(10);
  for (const PrecReal& a : inst.a_coeffs) {
    cert.matveev.a_coefficients.push_back(a.to_string(30));
  }
  cert.matveev.c_matveev = c_matveev.to_string(30);
  cert.matveev.k_coefficient = k_coeff.to_string(30);
  cert.matveev.n_bound = bound.n_bound;
  if (config.emit_trace) cert.matveev.trace = bound.trace;

  // stage 3: y bound
  cert.y_bound.n_bound_used = bound.n_bound;
  cert.y_bound.y_bound = derive_y_bound(bound.n_bound);

  // stage 4: reduction sweep over y; M dominates both the computed N and
  // the published choice so the epsilon table is reproducible
  mpz_class m_bound = std::max(bound.n_bound, kPublishedM);
  const int y_lo =
      config.y_range_override ? config.y_range_override->first : 4;
  const int y_hi = config.y_range_override ? config.y_range_override->second
                                           : cert.y_bound.y_bound;
  struct Stage4 {
    int digits;
    ContinuedFraction cf;
    SweepResult sweep;
  };
  Stage4 s4 = with_escalation(config.precision_digits, [&](int digits) {
    PrecReal gamma = const_log(LogBase::kAlpha, digits) /
                     const_log(LogBase::kThree, digits);
    ContinuedFraction cf = cf_expand(gamma, config.max_cf_terms);
    SweepResult sweep = sweep_y(y_lo, y_hi, m_bound, cf, digits);
    return Stage4{digits, std::move(cf), std::move(sweep)};
  });
  cert.reduction.precision_digits = s4.digits;
  cert.reduction.gamma = (const_log(LogBase::kAlpha, s4.digits) /
                          const_log(LogBase::kThree, s4.digits))
                             .to_string(40);
  cert.reduction.m_bound = m_bound;
  cert.reduction.six_m = 6 * m_bound;
  ConvergentHit hit = first_q_above(s4.cf, cert.reduction.six_m);
  cert.reduction.selected_index = hit.k;
  cert.reduction.q = hit.q;
  for (int k = 0; k < s4.cf.trusted_terms; ++k) {
    if (s4.cf.convergents[static_cast<size_t>(k)].second == kPublishedQ) {
      cert.reduction.published_q_present = true;
      cert.reduction.published_q_index = k;
      break;
    }
  }
  cert.reduction.published_q = kPublishedQ;
  for (const SweepRow& row : s4.sweep.table) {
    cert.reduction.rows.push_back(to_row(row));
  }
  cert.reduction.global_bound = s4.sweep.global_bound;
  cert.reduction.min_epsilon =
      min_epsilon_of(cert.reduction.rows, s4.digits);

  // cross-check table at the published q for every y
  {
    long published_bound = 0;
    for (int y = y_lo; y <= y_hi; ++y) {
      ReductionInstance ri = build_instance(y, m_bound, s4.digits);
      ReductionOutcome out = reduce_once(ri, kPublishedQ);
      if (out.status != ReductionStatus::kOk) {
        throw std::runtime_error(
            "published-q cross-check not certifiable at y=" +
            std::to_string(y));
      }
      cert.reduction.rows_published.push_back(to_row(
          SweepRow{y, cert.reduction.published_q_index, std::move(out)}));
      published_bound =
          std::max(published_bound,
                   cert.reduction.rows_published.back().omega_bound);
    }
    cert.reduction.published_table_bound = published_bound;
    cert.reduction.min_epsilon_published =
        min_epsilon_of(cert.reduction.rows_published, s4.digits);
  }

  // flag computed-vs-published differences
  {
    PrecReal eps_floor =
        PrecReal::from_decimal(kPublishedEpsilonFloor, s4.digits);
    PrecReal min_eps = PrecReal::from_decimal(
        cert.reduction.min_epsilon_published, s4.digits);
    if (min_eps.compare(eps_floor) < 0) {
      cert.reduction.published_discrepancy.push_back(
          Discrepancy{"min_epsilon over y at published q",
                      kPublishedEpsilonFloor,
                      cert.reduction.min_epsilon_published});
    }
    long computed = std::max(cert.reduction.global_bound,
                             cert.reduction.published_table_bound);
    if (computed + 1 > kPublishedNBound) {
      cert.reduction.published_discrepancy.push_back(Discrepancy{
          "n bound after reduction", "n < " + std::to_string(kPublishedNBound),
          "n <= " + std::to_string(computed)});
    }
    if (cert.reduction.q != kPublishedQ) {
      cert.reduction.published_discrepancy.push_back(
          Discrepancy{"selected convergent denominator",
                      kPublishedQ.get_str(), cert.reduction.q.get_str()});
    }
  }

  // stage 5: exhaustive search; the box can never be smaller than either
  // the computed bound or the published one
  long n_cap = std::max(config.n_max_floor, cert.reduction.global_bound);
  SearchBox box{4, cert.y_bound.y_bound, 3, n_cap, (11 * n_cap - 1) / 10};
  if (config.box_override) {
    box = *config.box_override;
    if (box.n_max > n_cap || box.y_max > cert.y_bound.y_bound) {
      throw std::runtime_error(
          "box override exceeds the bounds established by stages 2-4");
    }
  }
  cert.search.box = box;
  cert.search.solutions = search_box(box);

  // assemble the theorem from the scans and the box
  cert.solutions = assemble_theorem(
      cert.search.solutions, cert.preliminary.scans[0].solutions,
      cert.preliminary.scans[1].solutions, cert.preliminary.scans[2].solutions,
      cert.preliminary.scans[3].solutions);

  // internal consistency: stage-5 results must respect stage-2 N
  for (const SolutionTriple& s : cert.search.solutions) {
    if (mpz_class(s.n) > bound.n_bound) {
      throw std::runtime_error("search result violates the stage-2 bound");
    }
  }
  return cert;
}

}  // namespace pillai
