#include "pillai/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pillai/linforms.hpp"
#include "pillai/reduction.hpp"

namespace pillai {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

ordered_json pairs_to_json(const std::vector<std::pair<long, long>>& v) {
  ordered_json arr = ordered_json::array();
  for (auto [a, b] : v) arr.push_back(ordered_json::array({a, b}));
  return arr;
}

std::vector<std::pair<long, long>> pairs_from_json(const ordered_json& arr) {
  std::vector<std::pair<long, long>> v;
  for (const auto& e : arr) v.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
  return v;
}

ordered_json triples_to_json(const std::vector<SolutionTriple>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : v) arr.push_back(ordered_json::array({s.x, s.y, s.n}));
  return arr;
}

std::vector<SolutionTriple> triples_from_json(const ordered_json& arr) {
  std::vector<SolutionTriple> v;
  for (const auto& e : arr) {
    v.push_back({e.at(0).get<long>(), e.at(1).get<long>(), e.at(2).get<long>()});
  }
  return v;
}

ordered_json row_to_json(const ReductionRow& r) {
  return ordered_json{{"y", r.y},
                      {"convergent_index", r.convergent_index},
                      {"q", r.q.get_str()},
                      {"mu_q_dist", r.mu_q_dist},
                      {"m_gamma_q_dist", r.m_gamma_q_dist},
                      {"epsilon", r.epsilon},
                      {"omega_bound", r.omega_bound}};
}

ReductionRow row_from_json(const ordered_json& j) {
  ReductionRow r;
  r.y = j.at("y").get<int>();
  r.convergent_index = j.at("convergent_index").get<int>();
  r.q = mpz_class(j.at("q").get<std::string>());
  r.mu_q_dist = j.at("mu_q_dist").get<std::string>();
  r.m_gamma_q_dist = j.at("m_gamma_q_dist").get<std::string>();
  r.epsilon = j.at("epsilon").get<std::string>();
  r.omega_bound = j.at("omega_bound").get<long>();
  return r;
}

ordered_json rows_to_json(const std::vector<ReductionRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr;
}

std::vector<ReductionRow> rows_from_json(const ordered_json& arr) {
  std::vector<ReductionRow> rows;
  for (const auto& e : arr) rows.push_back(row_from_json(e));
  return rows;
}

}  // namespace

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  PipelineConfig cfg;
  std::optional<int> y_min, y_max;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "precision_digits") {
      cfg.precision_digits = std::stoi(value);
    } else if (key == "max_cf_terms") {
      cfg.max_cf_terms = std::stoi(value);
    } else if (key == "y_min") {
      y_min = std::stoi(value);
    } else if (key == "y_max") {
      y_max = std::stoi(value);
    } else if (key == "n_max_floor") {
      cfg.n_max_floor = std::stol(value);
    } else if (key == "out_path") {
      cfg.out_path = value;
    } else {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
  if (y_min || y_max) {
    if (!y_min || !y_max) {
      throw std::runtime_error("config: y_min and y_max must come together");
    }
    cfg.y_range_override = std::make_pair(*y_min, *y_max);
  }
  return cfg;
}

std::string certificate_to_string(const ProofCertificate& cert) {
  ordered_json j;
  j["format"] = "pillai-certificate/1";
  j["environment"] = ordered_json{{"library", cert.library_version},
                                  {"gmp", cert.lib_gmp},
                                  {"mpfr", cert.lib_mpfr}};
  j["config"] = ordered_json{{"precision_digits", cert.precision_digits},
                             {"max_cf_terms", cert.max_cf_terms},
                             {"n_max_floor", cert.n_max_floor},
                             {"emit_trace", cert.emit_trace}};

  ordered_json scans = ordered_json::array();
  for (const auto& s : cert.preliminary.scans) {
    scans.push_back(ordered_json{{"case", s.case_name},
                                 {"x_max", s.x_max},
                                 {"n_max", s.n_max},
                                 {"solutions", pairs_to_json(s.solutions)}});
  }
  j["stage_preliminary"] = ordered_json{
      {"odd_exponent",
       ordered_json{{"k_max", cert.preliminary.odd_exponent.k_max},
                    {"all_valuation_one",
                     cert.preliminary.odd_exponent.all_valuation_one},
                    {"first_failure_k",
                     cert.preliminary.odd_exponent.first_failure_k}}},
      {"scans", scans}};

  j["stage_matveev"] =
      ordered_json{{"precision_digits", cert.matveev.precision_digits},
                   {"num_logs", cert.matveev.num_logs},
                   {"field_degree", cert.matveev.field_degree},
                   {"coeff_bound_factor", cert.matveev.coeff_bound_factor},
                   {"a_coefficients", cert.matveev.a_coefficients},
                   {"c_matveev", cert.matveev.c_matveev},
                   {"k_coefficient", cert.matveev.k_coefficient},
                   {"n_bound", cert.matveev.n_bound.get_str()},
                   {"trace", cert.matveev.trace}};

  j["stage_y_bound"] =
      ordered_json{{"y_bound", cert.y_bound.y_bound},
                   {"n_bound_used", cert.y_bound.n_bound_used.get_str()}};

  ordered_json discrepancies = ordered_json::array();
  for (const auto& d : cert.reduction.published_discrepancy) {
    discrepancies.push_back(ordered_json{{"quantity", d.quantity},
                                         {"published", d.published},
                                         {"computed", d.computed}});
  }
  j["stage_reduction"] = ordered_json{
      {"precision_digits", cert.reduction.precision_digits},
      {"gamma", cert.reduction.gamma},
      {"m", cert.reduction.m_bound.get_str()},
      {"six_m", cert.reduction.six_m.get_str()},
      {"selected_index", cert.reduction.selected_index},
      {"q", cert.reduction.q.get_str()},
      {"published_q", cert.reduction.published_q.get_str()},
      {"published_q_present", cert.reduction.published_q_present},
      {"published_q_index", cert.reduction.published_q_index},
      {"rows", rows_to_json(cert.reduction.rows)},
      {"global_bound", cert.reduction.global_bound},
      {"min_epsilon", cert.reduction.min_epsilon},
      {"rows_published", rows_to_json(cert.reduction.rows_published)},
      {"published_table_bound", cert.reduction.published_table_bound},
      {"min_epsilon_published", cert.reduction.min_epsilon_published},
      {"published_discrepancy", discrepancies}};

  j["stage_search"] = ordered_json{
      {"box", ordered_json{{"y_min", cert.search.box.y_min},
                           {"y_max", cert.search.box.y_max},
                           {"n_min", cert.search.box.n_min},
                           {"n_max", cert.search.box.n_max},
                           {"x_max", cert.search.box.x_max}}},
      {"solutions", triples_to_json(cert.search.solutions)}};

  j["solutions"] = triples_to_json(cert.solutions);
  return j.dump(2) + "\n";
}

ProofCertificate certificate_from_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("format").get<std::string>() != "pillai-certificate/1") {
    throw std::runtime_error("unknown certificate format");
  }
  ProofCertificate c;
  const auto& env = j.at("environment");
  c.library_version = env.at("library").get<std::string>();
  c.lib_gmp = env.at("gmp").get<std::string>();
  c.lib_mpfr = env.at("mpfr").get<std::string>();
  const auto& cfg = j.at("config");
  c.precision_digits = cfg.at("precision_digits").get<int>();
  c.max_cf_terms = cfg.at("max_cf_terms").get<int>();
  c.n_max_floor = cfg.at("n_max_floor").get<long>();
  c.emit_trace = cfg.at("emit_trace").get<bool>();

  const auto& pre = j.at("stage_preliminary");
  const auto& odd = pre.at("odd_exponent");
  c.preliminary.odd_exponent.k_max = odd.at("k_max").get<long>();
  c.preliminary.odd_exponent.all_valuation_one =
      odd.at("all_valuation_one").get<bool>();
  c.preliminary.odd_exponent.first_failure_k =
      odd.at("first_failure_k").get<long>();
  for (const auto& s : pre.at("scans")) {
    ScanRecord rec;
    rec.case_name = s.at("case").get<std::string>();
    rec.x_max = s.at("x_max").get<long>();
    rec.n_max = s.at("n_max").get<long>();
    rec.solutions = pairs_from_json(s.at("solutions"));
    c.preliminary.scans.push_back(std::move(rec));
  }

  const auto& mat = j.at("stage_matveev");
  c.matveev.precision_digits = mat.at("precision_digits").get<int>();
  c.matveev.num_logs = mat.at("num_logs").get<int>();
  c.matveev.field_degree = mat.at("field_degree").get<int>();
  c.matveev.coeff_bound_factor =
      mat.at("coeff_bound_factor").get<std::string>();
  c.matveev.a_coefficients =
      mat.at("a_coefficients").get<std::vector<std::string>>();
  c.matveev.c_matveev = mat.at("c_matveev").get<std::string>();
  c.matveev.k_coefficient = mat.at("k_coefficient").get<std::string>();
  c.matveev.n_bound = mpz_class(mat.at("n_bound").get<std::string>());
  c.matveev.trace = mat.at("trace").get<std::vector<std::string>>();

  const auto& yb = j.at("stage_y_bound");
  c.y_bound.y_bound = yb.at("y_bound").get<int>();
  c.y_bound.n_bound_used = mpz_class(yb.at("n_bound_used").get<std::string>());

  const auto& red = j.at("stage_reduction");
  c.reduction.precision_digits = red.at("precision_digits").get<int>();
  c.reduction.gamma = red.at("gamma").get<std::string>();
  c.reduction.m_bound = mpz_class(red.at("m").get<std::string>());
  c.reduction.six_m = mpz_class(red.at("six_m").get<std::string>());
  c.reduction.selected_index = red.at("selected_index").get<int>();
  c.reduction.q = mpz_class(red.at("q").get<std::string>());
  c.reduction.published_q = mpz_class(red.at("published_q").get<std::string>());
  c.reduction.published_q_present = red.at("published_q_present").get<bool>();
  c.reduction.published_q_index = red.at("published_q_index").get<int>();
  c.reduction.rows = rows_from_json(red.at("rows"));
  c.reduction.global_bound = red.at("global_bound").get<long>();
  c.reduction.min_epsilon = red.at("min_epsilon").get<std::string>();
  c.reduction.rows_published = rows_from_json(red.at("rows_published"));
  c.reduction.published_table_bound =
      red.at("published_table_bound").get<long>();
  c.reduction.min_epsilon_published =
      red.at("min_epsilon_published").get<std::string>();
  for (const auto& d : red.at("published_discrepancy")) {
    c.reduction.published_discrepancy.push_back(
        Discrepancy{d.at("quantity").get<std::string>(),
                    d.at("published").get<std::string>(),
                    d.at("computed").get<std::string>()});
  }

  const auto& srch = j.at("stage_search");
  const auto& box = srch.at("box");
  c.search.box = SearchBox{box.at("y_min").get<int>(),
                           box.at("y_max").get<int>(),
                           box.at("n_min").get<long>(),
                           box.at("n_max").get<long>(),
                           box.at("x_max").get<long>()};
  c.search.solutions = triples_from_json(srch.at("solutions"));
  c.solutions = triples_from_json(j.at("solutions"));
  return c;
}

void emit_certificate(const ProofCertificate& cert, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << certificate_to_string(cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

ProofCertificate read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open certificate: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return certificate_from_string(buf.str());
}

CheckReport check_certificate(const ProofCertificate& cert) {
  CheckReport report;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };

  // every listed triple must satisfy the equation exactly
  for (const auto& s : cert.solutions) {
    if (!verify_triple(s.x, s.y, s.n)) {
      fail("final solution (" + std::to_string(s.x) + "," +
           std::to_string(s.y) + "," + std::to_string(s.n) +
           ") fails exact verification");
    }
    ++report.triples_verified;
  }
  for (const auto& s : cert.search.solutions) {
    if (!verify_triple(s.x, s.y, s.n)) {
      fail("search-stage solution fails exact verification");
    }
    ++report.triples_verified;
  }

  // epsilon rows: recompute for the recorded q at the recorded precision
  const int digits = cert.reduction.precision_digits;
  auto recheck_rows = [&](const std::vector<ReductionRow>& rows,
                          const char* label) {
    for (const auto& row : rows) {
      ReductionInstance inst =
          build_instance(row.y, cert.reduction.m_bound, digits);
      EpsilonParts parts;
      try {
        parts = epsilon_parts(inst, row.q);
      } catch (const PrecisionExhausted& e) {
        fail(std::string(label) + " y=" + std::to_string(row.y) + ": " +
             e.what());
        continue;
      }
      PrecReal recorded = PrecReal::from_decimal(row.epsilon, digits + kDualGap);
      if ((recorded - parts.epsilon).abs().compare(parts.budget) > 0) {
        fail(std::string(label) + " y=" + std::to_string(row.y) +
             ": recorded epsilon " + row.epsilon +
             " differs from recomputed " + parts.epsilon.to_string(20));
      }
      ++report.epsilon_rows_recomputed;
    }
  };
  recheck_rows(cert.reduction.rows, "reduction row");
  recheck_rows(cert.reduction.rows_published, "published-q row");

  // cross-stage consistency
  if (cert.reduction.six_m != 6 * cert.reduction.m_bound) {
    fail("six_m != 6 * m");
  }
  if (cert.reduction.q <= cert.reduction.six_m) {
    fail("selected q does not exceed 6M");
  }
  long n_cap = std::max(cert.n_max_floor, cert.reduction.global_bound);
  if (cert.search.box.n_max > n_cap) {
    fail("search box n_max " + std::to_string(cert.search.box.n_max) +
         " exceeds max(n_max_floor, reduction bound) = " +
         std::to_string(n_cap));
  }
  if (cert.search.box.y_max > cert.y_bound.y_bound) {
    fail("search box y_max exceeds the stage-3 y bound");
  }
  // x cap: x < 1.1 * n_max, exactly 10 x < 11 n
  if (10 * cert.search.box.x_max >= 11 * cert.search.box.n_max) {
    fail("search box x_max exceeds 1.1 * n_max");
  }
  // the y-bound stage must match its recorded input
  if (derive_y_bound(cert.y_bound.n_bound_used) != cert.y_bound.y_bound) {
    fail("y bound does not match derive_y_bound(recorded N)");
  }
  return report;
}

}  // namespace pillai
