/**
 * @file oracles.hpp
 * @brief Independent reference implementations used only by the tests.
 *
 * Everything here is written as plainly as possible and shares no code with
 * the library paths it checks: Gauss-Jordan instead of Cholesky, an O(n^2)
 * DFT instead of the radix-2 FFT, gradient descent instead of the
 * normal-equation solve, step-by-step greedy loops instead of the production
 * builders, and closed-form multiplication counts instead of summation loops.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sbprec/complexity.hpp"
#include "sbprec/linalg.hpp"
#include "sbprec/precoder.hpp"
#include "sbprec/rng.hpp"
#include "sbprec/types.hpp"

namespace oracle {

using sbprec::cplx;
using sbprec::ComplexMatrix;
using sbprec::ComplexVector;

inline ComplexMatrix random_matrix(sbprec::Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.standard_complex_gaussian();
  return m;
}

inline ComplexVector random_vector(sbprec::Rng& rng, std::size_t n) {
  ComplexVector v(n);
  for (cplx& x : v) x = rng.standard_complex_gaussian();
  return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

inline double rel_fro_err(const ComplexMatrix& got, const ComplexMatrix& want) {
  double num = 0.0, den = 0.0;
  for (std::size_t r = 0; r < want.rows(); ++r)
    for (std::size_t c = 0; c < want.cols(); ++c) {
      num += std::norm(got(r, c) - want(r, c));
      den += std::norm(want(r, c));
    }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// ---- dense algebra by naive loops -----------------------------------------

inline ComplexMatrix mm(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline ComplexVector mv(const ComplexMatrix& a, const ComplexVector& v) {
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    y[i] = s;
  }
  return y;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = std::conj(a(r, c));
  return t;
}

// Gauss-Jordan with partial pivoting; a is square, b holds the right-hand
// sides. Independent of the library's Cholesky route.
inline ComplexMatrix gauss_jordan_solve(ComplexMatrix a, ComplexMatrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("gauss_jordan: shape");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) == 0.0) throw std::runtime_error("gauss_jordan: singular");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(col, c), b(piv, c));
    }
    const cplx inv = 1.0 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < b.cols(); ++c) b(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) -= f * b(col, c);
    }
  }
  return b;
}

// Ridge solution through the normal equations, but solved by Gauss-Jordan.
inline ComplexMatrix ridge_via_gj(const ComplexMatrix& a, const ComplexMatrix& b, double kappa) {
  const ComplexMatrix ah = adjoint(a);
  ComplexMatrix g = mm(ah, a);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) += kappa;
  return gauss_jordan_solve(std::move(g), mm(ah, b));
}

// Plain gradient descent on f(X) = ||A X - B||_F^2 + kappa ||X||_F^2.
// Step size 1/L with L = 2 (||A||_F^2 + kappa), a safe Lipschitz bound.
inline ComplexMatrix ridge_via_gradient_descent(const ComplexMatrix& a, const ComplexMatrix& b,
                                                double kappa, int iterations) {
  double a_energy = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a_energy += std::norm(a(r, c));
  const double step = 1.0 / (2.0 * (a_energy + kappa));
  const ComplexMatrix ah = adjoint(a);

  ComplexMatrix x(a.cols(), b.cols());
  for (int it = 0; it < iterations; ++it) {
    ComplexMatrix resid = mm(a, x);
    for (std::size_t r = 0; r < resid.rows(); ++r)
      for (std::size_t c = 0; c < resid.cols(); ++c) resid(r, c) -= b(r, c);
    const ComplexMatrix grad_fit = mm(ah, resid);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        x(r, c) -= step * (2.0 * grad_fit(r, c) + 2.0 * kappa * x(r, c));
  }
  return x;
}

// O(n^2) unitary DFT matrix built entry by entry.
inline ComplexMatrix dense_dft(std::size_t n) {
  ComplexMatrix f(n, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(r) *
                         static_cast<double>(c) / static_cast<double>(n);
      f(r, c) = cplx{s * std::cos(ang), s * std::sin(ang)};
    }
  return f;
}

// ---- greedy reference implementations --------------------------------------

struct GreedyStep {
  std::size_t picked = 0;
  std::vector<std::size_t> support;  // in selection order
  double objective = 0.0;            // after the re-solve of this step
};

inline ComplexMatrix columns(const ComplexMatrix& a, const std::vector<std::size_t>& idx) {
  ComplexMatrix out(a.rows(), idx.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = a(r, idx[j]);
  return out;
}

// Column-wise greedy pursuit for one unit vector target: pick the beam whose
// column correlates strongest with the residual (strictly greater wins, so
// ties fall to the lowest index), re-solve the ridge problem on the support,
// recompute the residual from scratch.
inline std::vector<GreedyStep> reference_omp_column(const ComplexMatrix& hbar, std::size_t u,
                                                    double kappa, std::size_t K) {
  const std::size_t big_b = hbar.cols();
  const std::size_t big_u = hbar.rows();
  std::vector<bool> used(big_b, false);
  std::vector<std::size_t> support;
  ComplexVector resid(big_u, 0.0);
  resid[u] = 1.0;

  std::vector<GreedyStep> steps;
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t best = big_b;
    double best_mag = -1.0;
    for (std::size_t b = 0; b < big_b; ++b) {
      if (used[b]) continue;
      cplx corr = 0.0;
      for (std::size_t r = 0; r < big_u; ++r) corr += std::conj(hbar(r, b)) * resid[r];
      const double mag = std::abs(corr);
      if (mag > best_mag) {
        best_mag = mag;
        best = b;
      }
    }
    used[best] = true;
    support.push_back(best);

    ComplexMatrix target(big_u, 1);
    target(u, 0) = 1.0;
    const ComplexMatrix sol = ridge_via_gj(columns(hbar, support), target, kappa);

    ComplexVector fit(big_u, 0.0);
    for (std::size_t j = 0; j < support.size(); ++j)
      for (std::size_t r = 0; r < big_u; ++r) fit[r] += hbar(r, support[j]) * sol(j, 0);
    double obj = 0.0;
    for (std::size_t r = 0; r < big_u; ++r) {
      const cplx e = (r == u ? cplx{1.0, 0.0} : cplx{0.0, 0.0}) - fit[r];
      obj += std::norm(e);
    }
    for (std::size_t j = 0; j < support.size(); ++j) obj += kappa * std::norm(sol(j, 0));
    resid.assign(big_u, 0.0);
    resid[u] = 1.0;
    for (std::size_t r = 0; r < big_u; ++r) resid[r] -= fit[r];

    steps.push_back(GreedyStep{best, support, obj});
  }
  return steps;
}

// Shared-support variant: the score of a beam is the Euclidean norm of its
// column's correlation against the whole residual matrix, the re-solve
// targets the identity.
inline std::vector<GreedyStep> reference_mmv_omp(const ComplexMatrix& hbar, double kappa,
                                                 std::size_t K) {
  const std::size_t big_b = hbar.cols();
  const std::size_t big_u = hbar.rows();
  std::vector<bool> used(big_b, false);
  std::vector<std::size_t> support;
  ComplexMatrix resid = ComplexMatrix::identity(big_u);

  std::vector<GreedyStep> steps;
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t best = big_b;
    double best_score = -1.0;
    for (std::size_t b = 0; b < big_b; ++b) {
      if (used[b]) continue;
      double score = 0.0;
      for (std::size_t c = 0; c < big_u; ++c) {
        cplx corr = 0.0;
        for (std::size_t r = 0; r < big_u; ++r) corr += std::conj(hbar(r, b)) * resid(r, c);
        score += std::norm(corr);
      }
      if (score > best_score) {
        best_score = score;
        best = b;
      }
    }
    used[best] = true;
    support.push_back(best);

    const ComplexMatrix sol =
        ridge_via_gj(columns(hbar, support), ComplexMatrix::identity(big_u), kappa);
    const ComplexMatrix fit = mm(columns(hbar, support), sol);
    double obj = 0.0;
    for (std::size_t r = 0; r < big_u; ++r)
      for (std::size_t c = 0; c < big_u; ++c) {
        const cplx e = (r == c ? cplx{1.0, 0.0} : cplx{0.0, 0.0}) - fit(r, c);
        obj += std::norm(e);
      }
    for (std::size_t r = 0; r < sol.rows(); ++r)
      for (std::size_t c = 0; c < sol.cols(); ++c) obj += kappa * std::norm(sol(r, c));
    resid = ComplexMatrix::identity(big_u);
    for (std::size_t r = 0; r < big_u; ++r)
      for (std::size_t c = 0; c < big_u; ++c) resid(r, c) -= fit(r, c);

    steps.push_back(GreedyStep{best, support, obj});
  }
  return steps;
}

// Brute-force top-K by repeated scans; strictly-greater comparison keeps the
// lowest index on ties. Returned sorted ascending.
inline std::vector<std::size_t> top_k_brute(const std::vector<double>& score, std::size_t K) {
  std::vector<bool> taken(score.size(), false);
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t best = score.size();
    double best_score = -1.0;
    for (std::size_t i = 0; i < score.size(); ++i) {
      if (taken[i]) continue;
      if (score[i] > best_score) {
        best_score = score[i];
        best = i;
      }
    }
    taken[best] = true;
    picked.push_back(best);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

// Densify by direct placement, then apply the dense inverse DFT.
inline ComplexMatrix densify_by_hand(const sbprec::SparsePrecoder& p) {
  ComplexMatrix dense(p.B, p.U);
  if (p.structure == sbprec::SparsityStructure::kColumnSparse) {
    for (std::size_t u = 0; u < p.U; ++u)
      for (std::size_t i = 0; i < p.K; ++i)
        dense(p.col_supports[u][i], u) = p.values[u * p.K + i];
  } else {
    for (std::size_t r = 0; r < p.K; ++r)
      for (std::size_t u = 0; u < p.U; ++u)
        dense(p.row_support[r], u) = p.values[r * p.U + u];
  }
  return dense;
}

inline ComplexVector two_stage_by_hand(const sbprec::SparsePrecoder& p, const ComplexVector& s) {
  const ComplexVector xbar = mv(densify_by_hand(p), s);
  return mv(adjoint(dense_dft(p.B)), xbar);
}

// ---- multiplication counts in closed form ----------------------------------

// The library evaluates the summation expressions with direct loops; this
// transcription reduces every sum to a polynomial identity instead, so the
// two agree only if both transcriptions are faithful.
inline long long counts_closed_form_pre(sbprec::Algorithm alg, const sbprec::ComplexityInput& in) {
  using sbprec::Algorithm;
  const long long B = in.B, U = in.U, K = in.K;
  const long long lg = sbprec::ilog2(B);
  const auto inv_cost = [](long long u, long long cols) {
    return 2 * u * u * u + 6 * cols * u * u - 2 * u * (u + 1) + 1;
  };
  const long long s1 = U * (U - 1) / 2;
  const long long s2 = (U - 1) * U * (2 * U - 1) / 6;
  const long long back_subst = (2 * U - 1) * U * (U - 1) / 6;  // sum (i-1)(1+2(U-i))
  const long long expand = K * U * (U + 1) / 2;                // K * sum_{i<U} (U-i)

  switch (alg) {
    case Algorithm::kWf:
      return inv_cost(U, B);
    case Algorithm::kMrt:
      return 0;
    case Algorithm::kLocalWf:
      return 2 * U * B * lg + inv_cost(U, K);
    case Algorithm::kQr: {
      // sum_{n=K+1}^{B} n * sum_{j<U} (n-j)(U-j), inner sum reduced first
      const auto p1 = [](long long m) { return m * (m + 1) / 2; };
      const auto p2 = [](long long m) { return m * (m + 1) * (2 * m + 1) / 6; };
      const long long quad = (U * U - s1) * (p2(B) - p2(K));
      const long long lin = (s2 - U * s1) * (p1(B) - p1(K));
      return 2 * U * B * lg + 4 * back_subst + 12 * (quad + lin) + 4 * U * U + 4 * expand;
    }
    case Algorithm::kGbs: {
      const long long grow = K * U * U - (K + U) * s1 + s2;  // sum_{j<U} (K-j)(U-j)
      return 2 * U * B * lg + 12 * grow + 4 * U * U + 4 * back_subst + 4 * expand;
    }
    case Algorithm::kSbp: {
      const long long cubes = K * K * (K + 1) * (K + 1) / 4;
      const long long squares = K * (K + 1) * (2 * K + 1) / 6;
      const long long linear = K * (K + 1) / 2;
      const long long solves = cubes + 3 * U * squares - (U + 1) * linear + K;
      return 2 * U * B * lg + 4 * K * B * (U + 2) + 2 * U * K * (K + 1) + 2 * solves;
    }
    case Algorithm::kOneShotSbp:
      return 2 * U * B * lg +
             U * (4 * B * (U + 2) + 2 * K * K * K + 6 * U * K * K - 2 * (U + 1) * K + 1);
  }
  throw std::logic_error("counts_closed_form_pre: unknown algorithm");
}

inline long long counts_closed_form_app(sbprec::Algorithm alg, const sbprec::ComplexityInput& in) {
  using sbprec::Algorithm;
  const long long B = in.B, U = in.U, K = in.K, T = in.T, M = in.M;
  const long long lg = sbprec::ilog2(B);
  switch (alg) {
    case Algorithm::kWf:
    case Algorithm::kMrt:
      return 4 * T * B * U;
    case Algorithm::kLocalWf:
      return 4 * T * M * U + 2 * T * B * lg;
    default:
      return 4 * T * K * U + 2 * T * B * lg;
  }
}

}  // namespace oracle
