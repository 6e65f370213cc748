#pragma once

#include <compare>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pillai/sequences.hpp"

namespace pillai {

// Box for the exhaustive stage: y in [y_min, y_max], n in [n_min, n_max],
// x <= x_max with x a multiple of min_x_for_y(y).
struct SearchBox {
  int y_min;
  int y_max;
  long n_min;
  long n_max;
  long x_max;
};

struct SolutionTriple {
  long x;
  long y;
  long n;
  friend auto operator<=>(const SolutionTriple&,
                          const SolutionTriple&) = default;
};

// Exact check of 3^x - fib(n) * 2^y == 1.
bool verify_triple(long x, long y, long n);

// All solutions inside the box, sorted lexicographically by (y, x, n).
// For each y only multiples of min_x_for_y(y) are visited; 2^y | 3^x - 1
// is still verified exactly before dividing. The _serial variant is the
// reference; the default parallelizes the independent y slices.
std::vector<SolutionTriple> search_box(const SearchBox& box);
std::vector<SolutionTriple> search_box_serial(const SearchBox& box);

// Finite verification scans for the small-y cases and the F_n = 1 case.
enum class SpecialCase {
  kHalfDiff,         // F_n = (3^x - 1)/2        (y = 1)
  kQuarterNinePow,   // F_n = (9^k - 1)/4        (y = 2, x = 2k)
  kEighthNinePow,    // F_n = (9^k - 1)/8        (y = 3, x = 2k)
  kPurePower,        // 3^x - 2^y = 1            (F_n = 1)
};

// Solutions by exact enumeration inside the window; pairs are (x, n) for
// kHalfDiff, (k, n) for the 9^k forms (k <= x_max/2 so the implied x = 2k
// stays in-window), and (x, y) for kPurePower (n_max unused there).
std::vector<std::pair<long, long>> scan_special_case(SpecialCase which,
                                                     long x_max, long n_max);

// nu2(3^(2k-1) - 1) = 1 for every k in [1, k_max], so 4 and 8 never divide
// 3^odd - 1 and the y in {2, 3} with odd x branch is empty.
struct OddExponentReport {
  long k_max;
  bool all_valuation_one;
  long first_failure_k;  // 0 when none
};

OddExponentReport rule_out_odd_exponent_cases(long k_max = 64);

// Union of the y <= 3 solutions translated from the special cases
// (x = 2k for the 9^k forms, n in {1, 2} for kPurePower) and the y >= 4
// box results; sorted by (x, y, n), deduplicated, each re-verified.
std::vector<SolutionTriple> assemble_theorem(
    const std::vector<SolutionTriple>& box_solutions,
    const std::vector<std::pair<long, long>>& half_diff,
    const std::vector<std::pair<long, long>>& quarter_nine,
    const std::vector<std::pair<long, long>>& eighth_nine,
    const std::vector<std::pair<long, long>>& pure_power);

}  // namespace pillai
