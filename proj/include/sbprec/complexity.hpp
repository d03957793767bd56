/**
 * @file complexity.hpp
 * @brief Real-multiplication counts per precoding method and speed-up vs MRT.
 *
 * Counts split into preprocessing (computing the precoding matrix once per
 * coherence block) and precoding (applying it to T transmit vectors); a
 * B-point (I)FFT is counted as 2 B log2 B real multiplications. Summation
 * expressions are evaluated by direct loops in exact integer arithmetic.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sbprec {

enum class Algorithm { kWf, kMrt, kLocalWf, kQr, kGbs, kSbp, kOneShotSbp };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kWf,  Algorithm::kMrt, Algorithm::kLocalWf, Algorithm::kQr,
    Algorithm::kGbs, Algorithm::kSbp, Algorithm::kOneShotSbp};

const char* algorithm_name(Algorithm a);

struct ComplexityInput {
  std::int64_t B = 128;
  std::int64_t U = 16;
  std::int64_t K = 16;
  std::int64_t T = 1;
  std::int64_t M = 0;  // average nonzero count for the LocalWF row, user-supplied
};

struct MultCount {
  std::int64_t preprocessing = 0;
  std::int64_t precoding = 0;
  std::int64_t total() const { return preprocessing + precoding; }
};

// Exact multiplication counts for the given algorithm. The SBP row also
// covers RS and the 1S-SBP row also covers 1S-RS (equal totals).
MultCount count_multiplications(Algorithm alg, const ComplexityInput& in);

// Ratio of MRT's total count to the algorithm's, at the same T.
double speedup_vs_mrt(Algorithm alg, const ComplexityInput& in);

// Asymptotic (T -> infinity) speed-up of the sparse two-stage precoders:
// 2BU / (B log2 B + 2UK).
double gamma(std::int64_t B, std::int64_t U, std::int64_t K);

struct ComplexityRow {
  Algorithm algorithm;
  std::int64_t T = 0;
  MultCount count;
  double speedup = 0.0;
  bool formula_only = false;  // LocalWF: M is supplied, the method itself is not built
};

struct ComplexityReport {
  ComplexityInput input;          // T field unused; the grid below applies
  std::vector<std::int64_t> t_grid;
  std::vector<ComplexityRow> rows;  // one per (algorithm, T), algorithm-major
  double gamma = 0.0;
};

ComplexityReport build_complexity_report(const ComplexityInput& in,
                                         const std::vector<std::int64_t>& t_grid);

// Fixed column order: algorithm,T,preprocessing,precoding,total,speedup.
void write_complexity_csv(std::ostream& os, const ComplexityReport& report);

std::int64_t ilog2(std::int64_t b);  // b must be a power of two

}  // namespace sbprec
