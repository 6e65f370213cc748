// Command-line front end: prove / verify / search / reduce / cf / scan /
// check, as documented in the README.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pillai/linforms.hpp"
#include "pillai/pipeline.hpp"
#include "pillai/reduction.hpp"

namespace {

using namespace pillai;

int cmd_prove(const std::string& config_path, int precision,
              const std::string& out, bool trace) {
  PipelineConfig cfg;
  if (!config_path.empty()) cfg = load_config_file(config_path);
  if (precision > 0) cfg.precision_digits = precision;
  if (!out.empty()) cfg.out_path = out;
  cfg.emit_trace = cfg.emit_trace || trace;

  ProofCertificate cert = run_proof(cfg);
  std::string text = certificate_to_string(cert);
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    emit_certificate(cert, cfg.out_path);
    std::cout << "certificate written to " << cfg.out_path << "\n";
  }
  std::cout << "n bound:      " << cert.matveev.n_bound.get_str() << "\n"
            << "y bound:      " << cert.y_bound.y_bound << "\n"
            << "reduced n to: " << cert.reduction.global_bound << "\n"
            << "solutions:    ";
  for (const auto& s : cert.solutions) {
    std::cout << "(" << s.x << "," << s.y << "," << s.n << ") ";
  }
  std::cout << "\n";
  return 0;
}

int cmd_verify(long x, long y, long n) {
  bool ok = verify_triple(x, y, n);
  std::cout << "3^" << x << " - F(" << n << ")*2^" << y
            << (ok ? " == 1: solution\n" : " != 1: not a solution\n");
  return ok ? 0 : 1;
}

int cmd_search(int y_min, int y_max, long n_max, long x_max, long n_min) {
  if (x_max <= 0) x_max = (11 * n_max - 1) / 10;
  SearchBox box{y_min, y_max, n_min, n_max, x_max};
  auto found = search_box(box);
  for (const auto& s : found) {
    std::cout << "(" << s.x << "," << s.y << "," << s.n << ")\n";
  }
  std::cout << found.size() << " solution(s) in y [" << y_min << "," << y_max
            << "], n [" << n_min << "," << n_max << "], x <= " << x_max
            << "\n";
  return 0;
}

int cmd_reduce(int y, const std::string& m_str, int precision) {
  mpz_class m(m_str);
  PrecReal gamma = const_log(LogBase::kAlpha, precision) /
                   const_log(LogBase::kThree, precision);
  ContinuedFraction cf = cf_expand(gamma, 200);
  ConvergentHit hit = first_q_above(cf, 6 * m);
  ReductionInstance inst = build_instance(y, m, precision);
  mpz_class q = hit.q;
  for (int k = hit.k; k < cf.trusted_terms; ++k) {
    q = cf.convergents[static_cast<size_t>(k)].second;
    ReductionOutcome out = reduce_once(inst, q);
    if (out.status == ReductionStatus::kOk) {
      std::cout << "y:       " << y << "\n"
                << "M:       " << m.get_str() << "\n"
                << "q:       " << q.get_str() << " (convergent " << k << ")\n"
                << "eps:     " << out.epsilon.to_string(20) << "\n"
                << "||mu q||:    " << out.mu_q_dist.to_string(20) << "\n"
                << "M||gamma q||: " << out.m_gamma_q_dist.to_string(20) << "\n"
                << "n bound: " << out.omega_bound << "\n";
      return 0;
    }
    if (out.status == ReductionStatus::kPrecisionExhausted) {
      std::cerr << "precision exhausted; retry with --precision > "
                << precision << "\n";
      return 2;
    }
  }
  std::cerr << "no convergent with certifiable eps > 0 in the trusted "
               "expansion\n";
  return 2;
}

int cmd_cf(const std::string& which, int terms, int precision) {
  PrecReal x = which == "alpha"
                   ? const_alpha(precision)
                   : const_log(LogBase::kAlpha, precision) /
                         const_log(LogBase::kThree, precision);
  ContinuedFraction cf = cf_expand(x, terms);
  std::cout << "expansion of " << which << " at " << precision
            << " digits, " << cf.trusted_terms << " trusted term(s)"
            << (cf.exact_terminated ? ", terminated" : "") << "\n";
  for (int k = 0; k < cf.trusted_terms; ++k) {
    const auto& [p, q] = cf.convergents[static_cast<size_t>(k)];
    std::cout << "a[" << k << "] = " << cf.quotients[static_cast<size_t>(k)]
              << "   p/q = " << p.get_str() << "/" << q.get_str() << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& which, long x_max, long n_max) {
  SpecialCase c;
  if (which == "1.3") {
    c = SpecialCase::kHalfDiff;
  } else if (which == "1.4") {
    c = SpecialCase::kQuarterNinePow;
  } else if (which == "1.5") {
    c = SpecialCase::kEighthNinePow;
  } else if (which == "herschfeld") {
    c = SpecialCase::kPurePower;
  } else {
    std::cerr << "unknown case " << which
              << " (expected 1.3, 1.4, 1.5 or herschfeld)\n";
    return 2;
  }
  auto found = scan_special_case(c, x_max, n_max);
  for (auto [a, b] : found) std::cout << "(" << a << "," << b << ")\n";
  std::cout << found.size() << " solution(s) in window\n";
  return 0;
}

int cmd_check(const std::string& path) {
  ProofCertificate cert = read_certificate(path);
  CheckReport report = check_certificate(cert);
  for (const auto& f : report.failures) std::cout << "FAIL: " << f << "\n";
  std::cout << (report.ok ? "certificate OK" : "certificate INVALID") << " ("
            << report.triples_verified << " triples, "
            << report.epsilon_rows_recomputed << " epsilon rows)\n";
  return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof pipeline for the equation 3^x - F_n 2^y = 1"};
  app.require_subcommand(1);

  auto* prove = app.add_subcommand("prove", "run the full pipeline");
  std::string config_path, out_path;
  int precision = 0;
  bool trace = false;
  prove->add_option("--config", config_path, "key = value config file");
  prove->add_option("--precision", precision, "working decimal digits");
  prove->add_option("--out", out_path, "certificate output path");
  prove->add_flag("--trace", trace, "record fixed-point iteration history");

  auto* verify = app.add_subcommand("verify", "exact check of one triple");
  long vx = 0, vy = 0, vn = 0;
  verify->add_option("x", vx)->required();
  verify->add_option("y", vy)->required();
  verify->add_option("n", vn)->required();

  auto* search = app.add_subcommand("search", "exhaustive box search");
  int sy_min = 4, sy_max = 56;
  long sn_max = 0, sx_max = 0, sn_min = 1;
  search->add_option("--y-min", sy_min)->required();
  search->add_option("--y-max", sy_max)->required();
  search->add_option("--n-max", sn_max)->required();
  search->add_option("--x-max", sx_max, "default: floor of 1.1 * n-max");
  search->add_option("--n-min", sn_min);

  auto* reduce = app.add_subcommand("reduce", "one reduction instance");
  int ry = 0, rprec = 60;
  std::string rm = kPublishedM.get_str();
  reduce->add_option("--y", ry)->required();
  reduce->add_option("--m", rm, "bound M (integer)");
  reduce->add_option("--precision", rprec);

  auto* cf = app.add_subcommand("cf", "continued-fraction expansion");
  std::string cf_const;
  int cf_terms = 50, cf_prec = 60;
  cf->add_option("--const", cf_const, "alpha or gamma")
      ->required()
      ->check(CLI::IsMember({"alpha", "gamma"}));
  cf->add_option("--terms", cf_terms);
  cf->add_option("--precision", cf_prec);

  auto* scan = app.add_subcommand("scan", "special-case window scan");
  std::string scan_case;
  long scan_x = 120, scan_n = 300;
  scan->add_option("--case", scan_case, "1.3, 1.4, 1.5 or herschfeld")
      ->required();
  scan->add_option("--x-max", scan_x);
  scan->add_option("--n-max", scan_n);

  auto* check = app.add_subcommand("check", "certificate self-validation");
  std::string check_path;
  check->add_option("file", check_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove->parsed()) return cmd_prove(config_path, precision, out_path, trace);
    if (verify->parsed()) return cmd_verify(vx, vy, vn);
    if (search->parsed())
      return cmd_search(sy_min, sy_max, sn_max, sx_max, sn_min);
    if (reduce->parsed()) return cmd_reduce(ry, rm, rprec);
    if (cf->parsed()) return cmd_cf(cf_const, cf_terms, cf_prec);
    if (scan->parsed()) return cmd_scan(scan_case, scan_x, scan_n);
    if (check->parsed()) return cmd_check(check_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
