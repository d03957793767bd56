/**
 * @file complexity.cpp
 * @brief Multiplication-count formulas, evaluated with direct summation loops.
 */
#include "sbprec/complexity.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sbprec {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kWf: return "WF";
    case Algorithm::kMrt: return "MRT";
    case Algorithm::kLocalWf: return "LocalWF";
    case Algorithm::kQr: return "QR";
    case Algorithm::kGbs: return "GBS";
    case Algorithm::kSbp: return "SBP";
    case Algorithm::kOneShotSbp: return "1S-SBP";
  }
  return "?";
}

std::int64_t ilog2(std::int64_t b) {
  if (b <= 0 || (b & (b - 1)) != 0) {
    throw std::invalid_argument("ilog2: argument must be a power of two");
  }
  std::int64_t lg = 0;
  while (b > 1) {
    b >>= 1;
    ++lg;
  }
  return lg;
}

namespace {

using i64 = std::int64_t;

// Inversion of a U x U Hermitian system by Cholesky-style elimination:
// 2U^3 + 6cU^2 - 2U(U+1) + 1 with c columns on the right-hand side.
i64 regularized_inverse_cost(i64 u, i64 c) {
  return 2 * u * u * u + 6 * c * u * u - 2 * u * (u + 1) + 1;
}

// Shared by QR and GBS: triangular back-substitution setup and the final
// K-column expansion of the U x U solve.
i64 back_substitution_cost(i64 u) {
  i64 s = 0;
  for (i64 i = 1; i <= u; ++i) s += (i - 1) * (1 + 2 * (u - i));
  return 4 * s;
}

i64 solve_expand_cost(i64 u, i64 k) {
  i64 s = 0;
  for (i64 i = 0; i < u; ++i) s += u - i;
  return 4 * k * s;
}

i64 qr_preprocessing(i64 b, i64 u, i64 k, i64 lg) {
  i64 deflate = 0;
  for (i64 i = 0; i <= b - k - 1; ++i) {
    i64 inner = 0;
    for (i64 j = 0; j < u; ++j) inner += (b - i - j) * (u - j);
    deflate += (b - i) * inner;
  }
  return 2 * u * b * lg + back_substitution_cost(u) + 12 * deflate +
         4 * u * u + solve_expand_cost(u, k);
}

i64 gbs_preprocessing(i64 b, i64 u, i64 k, i64 lg) {
  i64 grow = 0;
  for (i64 j = 0; j < u; ++j) grow += (k - j) * (u - j);
  return 2 * u * b * lg + 12 * grow + 4 * u * u + back_substitution_cost(u) +
         solve_expand_cost(u, k);
}

i64 sbp_preprocessing(i64 b, i64 u, i64 k, i64 lg) {
  i64 solves = 0;
  for (i64 i = 1; i <= k; ++i) {
    solves += i * i * i + 3 * u * i * i - (u + 1) * i + 1;
  }
  return 2 * u * b * lg + 4 * k * b * (u + 2) + 2 * u * k * (k + 1) +
         2 * solves;
}

i64 one_shot_sbp_preprocessing(i64 b, i64 u, i64 k, i64 lg) {
  return 2 * u * b * lg +
         u * (4 * b * (u + 2) + 2 * k * k * k + 6 * u * k * k -
              2 * (u + 1) * k + 1);
}

}  // namespace

MultCount count_multiplications(Algorithm alg, const ComplexityInput& in) {
  const i64 b = in.B;
  const i64 u = in.U;
  const i64 k = in.K;
  const i64 t = in.T;
  const i64 lg = ilog2(b);
  const i64 dense_apply = 4 * t * b * u;
  const i64 sparse_apply = 4 * t * k * u + 2 * t * b * lg;

  switch (alg) {
    case Algorithm::kWf:
      return {regularized_inverse_cost(u, b), dense_apply};
    case Algorithm::kMrt:
      return {0, dense_apply};
    case Algorithm::kLocalWf:
      return {2 * u * b * lg + regularized_inverse_cost(u, k),
              4 * t * in.M * u + 2 * t * b * lg};
    case Algorithm::kQr:
      return {qr_preprocessing(b, u, k, lg), sparse_apply};
    case Algorithm::kGbs:
      return {gbs_preprocessing(b, u, k, lg), sparse_apply};
    case Algorithm::kSbp:
      return {sbp_preprocessing(b, u, k, lg), sparse_apply};
    case Algorithm::kOneShotSbp:
      return {one_shot_sbp_preprocessing(b, u, k, lg), sparse_apply};
  }
  throw std::logic_error("count_multiplications: unknown algorithm");
}

double speedup_vs_mrt(Algorithm alg, const ComplexityInput& in) {
  const MultCount mrt = count_multiplications(Algorithm::kMrt, in);
  const MultCount own = count_multiplications(alg, in);
  return static_cast<double>(mrt.total()) / static_cast<double>(own.total());
}

double gamma(std::int64_t B, std::int64_t U, std::int64_t K) {
  const double num = 2.0 * static_cast<double>(B) * static_cast<double>(U);
  const double den = static_cast<double>(B) * static_cast<double>(ilog2(B)) +
                     2.0 * static_cast<double>(U) * static_cast<double>(K);
  return num / den;
}

ComplexityReport build_complexity_report(const ComplexityInput& in,
                                         const std::vector<std::int64_t>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("complexity report: empty T grid");
  ComplexityReport report;
  report.input = in;
  report.t_grid = t_grid;
  report.gamma = gamma(in.B, in.U, in.K);
  for (Algorithm alg : kAllAlgorithms) {
    for (std::int64_t t : t_grid) {
      if (t < 1) throw std::invalid_argument("complexity report: T must be >= 1");
      ComplexityInput point = in;
      point.T = t;
      ComplexityRow row;
      row.algorithm = alg;
      row.T = t;
      row.count = count_multiplications(alg, point);
      row.speedup = speedup_vs_mrt(alg, point);
      row.formula_only = (alg == Algorithm::kLocalWf);
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_complexity_csv(std::ostream& os, const ComplexityReport& report) {
  os << "algorithm,T,preprocessing,precoding,total,speedup\n";
  char line[256];
  for (const ComplexityRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%s,%lld,%lld,%lld,%lld,%.10g\n",
                  algorithm_name(row.algorithm),
                  static_cast<long long>(row.T),
                  static_cast<long long>(row.count.preprocessing),
                  static_cast<long long>(row.count.precoding),
                  static_cast<long long>(row.count.total()),
                  row.speedup);
    os << line;
  }
}

}  // namespace sbprec
