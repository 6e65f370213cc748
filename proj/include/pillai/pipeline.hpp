#pragma once

#include "pillai/certificate.hpp"

namespace pillai {

inline constexpr const char* kLibraryVersion = "pillai 0.1.0";

// The published values this pipeline cross-checks its own results against.
inline const mpz_class kPublishedM("21600000000000000");          // 2.16e16
inline const mpz_class kPublishedQ("1116972345258589541");
inline constexpr long kPublishedNBound = 94;                      // n < 94
inline constexpr const char* kPublishedEpsilonFloor = "0.0096";
inline constexpr const char* kPublishedMuDistFloor = "0.0296";
inline constexpr const char* kPublishedGammaDistCap = "0.02";

// Runs the five proof stages end to end:
//   1. odd-exponent rule-out and the four finite scans,
//   2. the lower-bound chain giving N with n < N,
//   3. the y bound from 2^(y-2) < 1.1 N,
//   4. expansion of gamma and the per-y reduction sweep,
//   5. the exhaustive box search,
// then assembles and verifies the final solution list. Stages that raise
// PrecisionExhausted are retried with 40 more digits (up to 4 times); the
// certificate records the precision each stage finally used. Deterministic
// for a fixed config.
ProofCertificate run_proof(const PipelineConfig& config);

}  // namespace pillai
