#include "pillai/search.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace pillai {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, e);
  return p;
}

void check_box(const SearchBox& box) {
  if (box.y_min < 1 || box.y_min > box.y_max || box.n_min < 1 ||
      box.n_min > box.n_max || box.x_max < 1) {
    throw std::invalid_argument("invalid search box");
  }
}

// Solutions for one y slice, in increasing x.
std::vector<SolutionTriple> search_y_slice(const SearchBox& box, int y) {
  std::vector<SolutionTriple> found;
  mpz_class step = min_x_for_y(y);
  if (step > box.x_max) return found;
  const long step_l = static_cast<long>(step.get_si());
  const mpz_class two_y = pow_ui(2, static_cast<unsigned long>(y));
  const mpz_class pow_step = pow_ui(3, static_cast<unsigned long>(step_l));
  mpz_class pow3_x = 1;
  for (long x = step_l; x <= box.x_max; x += step_l) {
    pow3_x = (x == step_l) ? pow_step : pow3_x * pow_step;
    mpz_class numer = pow3_x - 1;
    if (!mpz_divisible_p(numer.get_mpz_t(), two_y.get_mpz_t())) continue;
    mpz_class m = numer / two_y;
    FibIndex hit = is_fibonacci(m);
    if (!hit.is_member) continue;
    // F(1) = F(2) = 1: m == 1 matches both indices
    for (long n : (m == 1) ? std::vector<long>{1, 2}
                           : std::vector<long>{hit.index}) {
      if (n >= box.n_min && n <= box.n_max) found.push_back({x, y, n});
    }
  }
  return found;
}

}  // namespace

bool verify_triple(long x, long y, long n) {
  if (x < 1 || y < 1 || n < 1) {
    throw std::invalid_argument("verify_triple: arguments must be positive");
  }
  mpz_class lhs = pow_ui(3, static_cast<unsigned long>(x)) -
                  fib(n) * pow_ui(2, static_cast<unsigned long>(y));
  return lhs == 1;
}

std::vector<SolutionTriple> search_box_serial(const SearchBox& box) {
  check_box(box);
  std::vector<SolutionTriple> all;
  for (int y = box.y_min; y <= box.y_max; ++y) {
    auto slice = search_y_slice(box, y);
    all.insert(all.end(), slice.begin(), slice.end());
  }
  std::sort(all.begin(), all.end(),
            [](const SolutionTriple& a, const SolutionTriple& b) {
              return std::tie(a.y, a.x, a.n) < std::tie(b.y, b.x, b.n);
            });
  return all;
}

std::vector<SolutionTriple> search_box(const SearchBox& box) {
  check_box(box);
  const int count = box.y_max - box.y_min + 1;
  std::vector<std::vector<SolutionTriple>> slices(
      static_cast<size_t>(count));
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      slices[static_cast<size_t>(i)] = search_y_slice(box, box.y_min + i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<SolutionTriple> all;
  for (const auto& slice : slices) {
    all.insert(all.end(), slice.begin(), slice.end());
  }
  std::sort(all.begin(), all.end(),
            [](const SolutionTriple& a, const SolutionTriple& b) {
              return std::tie(a.y, a.x, a.n) < std::tie(b.y, b.x, b.n);
            });
  return all;
}

std::vector<std::pair<long, long>> scan_special_case(SpecialCase which,
                                                     long x_max, long n_max) {
  if (x_max < 1 || n_max < 1) {
    throw std::invalid_argument("scan window must be positive");
  }
  std::vector<std::pair<long, long>> out;

  if (which == SpecialCase::kPurePower) {
    // 3^x - 1 must be an exact power of two
    for (long x = 1; x <= x_max; ++x) {
      mpz_class v = pow_ui(3, static_cast<unsigned long>(x)) - 1;
      unsigned long v2 = mpz_scan1(v.get_mpz_t(), 0);
      if ((mpz_class(1) << v2) == v) {
        out.emplace_back(x, static_cast<long>(v2));
      }
    }
    return out;
  }

  // fib table up to n_max for exact membership with both indices of 1
  std::vector<mpz_class> fibs(static_cast<size_t>(n_max) + 1);
  fibs[1] = 1;
  if (n_max >= 2) fibs[2] = 1;
  for (long n = 3; n <= n_max; ++n) {
    fibs[static_cast<size_t>(n)] =
        fibs[static_cast<size_t>(n - 1)] + fibs[static_cast<size_t>(n - 2)];
  }
  auto match_all = [&](const mpz_class& m, long k, long upper) {
    for (long n = 1; n <= upper; ++n) {
      if (fibs[static_cast<size_t>(n)] == m) out.emplace_back(k, n);
      if (fibs[static_cast<size_t>(n)] > m) break;
    }
  };

  switch (which) {
    case SpecialCase::kHalfDiff:
      for (long x = 1; x <= x_max; ++x) {
        mpz_class m = (pow_ui(3, static_cast<unsigned long>(x)) - 1) / 2;
        match_all(m, x, n_max);
      }
      break;
    case SpecialCase::kQuarterNinePow:
    case SpecialCase::kEighthNinePow: {
      const long div = which == SpecialCase::kQuarterNinePow ? 4 : 8;
      for (long k = 1; 2 * k <= x_max; ++k) {
        mpz_class m = (pow_ui(9, static_cast<unsigned long>(k)) - 1) / div;
        match_all(m, k, n_max);
      }
      break;
    }
    case SpecialCase::kPurePower:
      break;  // handled above
  }
  return out;
}

OddExponentReport rule_out_odd_exponent_cases(long k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  OddExponentReport report{k_max, true, 0};
  for (long k = 1; k <= k_max; ++k) {
    if (nu2_pow3_minus1(2 * k - 1).valuation != 1) {
      report.all_valuation_one = false;
      report.first_failure_k = k;
      break;
    }
  }
  return report;
}

std::vector<SolutionTriple> assemble_theorem(
    const std::vector<SolutionTriple>& box_solutions,
    const std::vector<std::pair<long, long>>& half_diff,
    const std::vector<std::pair<long, long>>& quarter_nine,
    const std::vector<std::pair<long, long>>& eighth_nine,
    const std::vector<std::pair<long, long>>& pure_power) {
  std::vector<SolutionTriple> all;
  for (auto [x, n] : half_diff) all.push_back({x, 1, n});
  for (auto [k, n] : quarter_nine) all.push_back({2 * k, 2, n});
  for (auto [k, n] : eighth_nine) all.push_back({2 * k, 3, n});
  for (auto [x, y] : pure_power) {
    all.push_back({x, y, 1});
    all.push_back({x, y, 2});
  }
  all.insert(all.end(), box_solutions.begin(), box_solutions.end());

  std::sort(all.begin(), all.end(),
            [](const SolutionTriple& a, const SolutionTriple& b) {
              return std::tie(a.x, a.y, a.n) < std::tie(b.x, b.y, b.n);
            });
  all.erase(std::unique(all.begin(), all.end()), all.end());

  for (const SolutionTriple& s : all) {
    if (!verify_triple(s.x, s.y, s.n)) {
      throw std::runtime_error(
          "assemble_theorem: assembled triple fails exact verification (" +
          std::to_string(s.x) + "," + std::to_string(s.y) + "," +
          std::to_string(s.n) + ")");
    }
  }
  return all;
}

}  // namespace pillai
