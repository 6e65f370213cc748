#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/numerics.hpp"

namespace pillai {

// The four algebraic numbers of the linear form 3^x * sqrt(5) * alpha^-n
// * 2^-y - 1, all living in Q(sqrt 5) (degree 2 over Q).
enum class CatalogTag { kThree, kTwo, kSqrt5, kAlpha };

struct AlgebraicConstant {
  CatalogTag tag;
  int degree;         // 1 for the rationals, 2 for sqrt(5) and alpha
  PrecReal height;    // logarithmic height h
  PrecReal log_value; // natural log of the constant
};

AlgebraicConstant make_constant(CatalogTag tag, int digits);

// Catalog heights: h(3) = log 3, h(2) = log 2, h(sqrt5) = log(5)/2,
// h(alpha) = log(alpha)/2.
PrecReal height(CatalogTag tag, int digits);

// A_j = max(dL * h(g_j), |log g_j|, 0.16) for each catalog constant.
std::vector<PrecReal> a_coefficients(std::span<const CatalogTag> tags,
                                     int field_degree, int digits);

// Data for one lower-bound evaluation: num_logs algebraic numbers in a
// field of degree field_degree, exponents bounded by coeff_bound_factor
// times the main variable, with the A_j already validated.
struct MatveevInstance {
  int num_logs;
  int field_degree;
  PrecReal coeff_bound_factor;
  std::vector<PrecReal> a_coeffs;
  int digits;
};

// The instance for this equation: the four catalog constants, dL = 2,
// T = 1.1 n.
MatveevInstance paper_instance(int digits);

// C = 1.4 * 30^(n+3) * n^4.5 * dL^2 * (1 + log dL) * prod A_j, the full
// constant multiplying (1 + log T) in the exponent of the lower bound.
PrecReal matveev_coefficient(const MatveevInstance& inst);

// Combines the lower bound with |Lambda| < sqrt(5)/alpha^n: divides by
// log(alpha) and absorbs the additive log(sqrt 5) term by widening 1.4 to
// 1.5, yielding n < K * (1 + log(1.1 n)).
PrecReal combine_with_lambda_bound(const PrecReal& c_matveev);

struct BoundResult {
  PrecReal coefficient;             // K
  mpz_class n_bound;                // N: every n < K(1+log(c n)) has n <= N
  std::vector<std::string> trace;   // fixed-point iterates
};

// Ceiling of the fixed point of N -> K(1 + log(c N)), iterated from
// N0 = K. Throws on non-convergence within 200 iterations.
BoundResult solve_n_bound(const PrecReal& k_coeff, const PrecReal& c);

// Largest y with 2^(y-2) < 1.1 * N, computed exactly.
int derive_y_bound(const mpz_class& n_bound);

// Certifies 3^x * 2^-y != alpha^n / sqrt(5) by separating the logs of the
// two sides. Needed because the lower bound assumes a nonzero linear form.
CertifiedBool certify_lambda_nonzero(long x, long y, long n, int digits);

}  // namespace pillai
