#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pillai/search.hpp"

namespace pillai {

struct PipelineConfig {
  int precision_digits = 60;
  int max_cf_terms = 200;
  std::optional<std::pair<int, int>> y_range_override;
  std::optional<SearchBox> box_override;
  long n_max_floor = 94;
  std::string out_path;
  bool emit_trace = false;
};

// Flat key = value file: precision_digits, max_cf_terms, y_min, y_max,
// n_max_floor, out_path. Unknown keys are rejected. CLI flags override.
PipelineConfig load_config_file(const std::string& path);

struct ScanRecord {
  std::string case_name;  // "1.3", "1.4", "1.5", "herschfeld"
  long x_max = 0;
  long n_max = 0;
  std::vector<std::pair<long, long>> solutions;
};

struct StagePreliminary {
  OddExponentReport odd_exponent;
  std::vector<ScanRecord> scans;
};

struct StageMatveev {
  int precision_digits = 0;
  int num_logs = 0;
  int field_degree = 0;
  std::string coeff_bound_factor;
  std::vector<std::string> a_coefficients;
  std::string c_matveev;
  std::string k_coefficient;
  mpz_class n_bound;
  std::vector<std::string> trace;  // fixed-point iterates when emit_trace
};

struct StageYBound {
  int y_bound = 0;
  mpz_class n_bound_used;
};

struct ReductionRow {
  int y = 0;
  int convergent_index = 0;
  mpz_class q;
  std::string mu_q_dist;
  std::string m_gamma_q_dist;
  std::string epsilon;
  long omega_bound = 0;
};

struct Discrepancy {
  std::string quantity;
  std::string published;
  std::string computed;
};

struct StageReduction {
  int precision_digits = 0;
  std::string gamma;
  mpz_class m_bound;
  mpz_class six_m;
  int selected_index = 0;
  mpz_class q;  // selected convergent denominator (smallest above 6M)
  bool published_q_present = false;
  int published_q_index = -1;
  mpz_class published_q;
  std::vector<ReductionRow> rows;            // per-y sweep outcome
  long global_bound = 0;
  std::vector<ReductionRow> rows_published;  // cross-check at published q
  long published_table_bound = 0;
  std::string min_epsilon;            // over sweep rows
  std::string min_epsilon_published;  // over the published-q table
  std::vector<Discrepancy> published_discrepancy;
};

struct StageSearch {
  SearchBox box{};
  std::vector<SolutionTriple> solutions;
};

struct ProofCertificate {
  // environment
  std::string library_version;
  std::string lib_gmp;
  std::string lib_mpfr;
  // config echo (out_path omitted: it does not affect the computation)
  int precision_digits = 0;
  int max_cf_terms = 0;
  long n_max_floor = 0;
  bool emit_trace = false;

  StagePreliminary preliminary;
  StageMatveev matveev;
  StageYBound y_bound;
  StageReduction reduction;
  StageSearch search;
  std::vector<SolutionTriple> solutions;
};

// Canonical serialization: stable key order, all big integers and reals as
// decimal strings. Byte-identical for identical configs.
std::string certificate_to_string(const ProofCertificate& cert);
ProofCertificate certificate_from_string(const std::string& text);

void emit_certificate(const ProofCertificate& cert, const std::string& path);
ProofCertificate read_certificate(const std::string& path);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  int triples_verified = 0;
  int epsilon_rows_recomputed = 0;
};

// Re-verifies every solution triple exactly and re-computes every epsilon
// row for the recorded q at the recorded precision, plus the cross-stage
// bound consistency, without re-running the expansion.
CheckReport check_certificate(const ProofCertificate& cert);

}  // namespace pillai
