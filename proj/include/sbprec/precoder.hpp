/**
 * @file precoder.hpp
 * @brief Precoder constructions: Wiener filter, MRT, and the four sparse
 *        beamspace precoders, plus normalization and application paths.
 *
 * Sparse precoders are built by greedy support selection in the beamspace
 * domain: per-column matching pursuit (column-sparse), a shared-row
 * multiple-measurement variant (row-structured), and one-shot versions that
 * pick the whole support from the initial selection criterion. Construction
 * is parallel across columns where the columns are independent; *_serial
 * variants run the identical computation on one thread and exist as the
 * reference implementations for tests and benchmarks.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sbprec/channel.hpp"
#include "sbprec/fft.hpp"
#include "sbprec/types.hpp"

namespace sbprec {

enum class PrecoderDomain { kAntenna, kBeamspace };

struct DensePrecoder {
  ComplexMatrix P;  // B x U, normalized
  PrecoderDomain domain = PrecoderDomain::kAntenna;
  double beta = 1.0;
};

enum class SparsityStructure { kColumnSparse, kRowStructured };

// Normalized sparse beamspace precoding matrix. Only the K*U structural
// nonzeros are stored; supports are strictly increasing beam indices.
struct SparsePrecoder {
  SparsityStructure structure = SparsityStructure::kColumnSparse;
  std::size_t B = 0;
  std::size_t U = 0;
  std::size_t K = 0;
  double beta = 1.0;

  // column-sparse: col_supports[u] holds column u's K beam indices and
  // values[u*K + i] the matching entries.
  std::vector<std::vector<std::size_t>> col_supports;
  // row-structured: row_support holds the K shared beam indices and
  // values[r*U + u] the entry at (row_support[r], u).
  std::vector<std::size_t> row_support;

  std::vector<cplx> values;

  ComplexMatrix densify() const;
};

// Per-iteration record of the greedy construction, filled when requested.
// selection_order[c][k] is the beam picked at iteration k (one entry list for
// the row-structured method); objectives[c][k] the regularized residual
// objective after the iteration-k re-solve.
struct GreedyTrace {
  std::vector<std::vector<std::size_t>> selection_order;
  std::vector<std::vector<double>> objectives;
};

// Unnormalized Wiener filter Q = (H^H H + kappa I_B)^{-1} H^H, computed via
// the equivalent U x U form Q = H^H (H H^H + kappa I_U)^{-1}.
ComplexMatrix wf(const ComplexMatrix& H, double kappa);

// Maximum ratio transmission, Q = H^H.
ComplexMatrix mrt(const ComplexMatrix& H);

// Power normalization: beta = sqrt(tr(Q^H Q) Es / rho^2), P = Q / beta, so
// that tr(P^H P) Es = rho^2. Throws std::domain_error on an all-zero Q.
std::pair<ComplexMatrix, double> normalize(const ComplexMatrix& Q, double es, double rho2);

// Column-sparse precoder: K greedy iterations per column; each iteration
// correlates the residual with the beamspace columns, augments the support
// and re-solves the ridge system against e_u.
SparsePrecoder sbp(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                   double es = 1.0, double rho2 = 1.0, GreedyTrace* trace = nullptr);
SparsePrecoder sbp_serial(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                          double es = 1.0, double rho2 = 1.0, GreedyTrace* trace = nullptr);

// Row-structured precoder: one shared support grown over K iterations with
// the multiple-measurement criterion ||hbar_b^H R||_2, re-solving against I_U.
SparsePrecoder rs(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                  double es = 1.0, double rho2 = 1.0, GreedyTrace* trace = nullptr);

// One-shot variants: the full support is taken from the initial criterion
// (per-row top-K magnitudes / top-K column norms), then a single re-solve.
SparsePrecoder one_shot_sbp(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                            double es = 1.0, double rho2 = 1.0);
SparsePrecoder one_shot_sbp_serial(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                                   double es = 1.0, double rho2 = 1.0);
SparsePrecoder one_shot_rs(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                           double es = 1.0, double rho2 = 1.0);

// Two-stage application x = F_B^H (Pbar s) using only the stored nonzeros
// followed by the inverse FFT.
ComplexVector apply_two_stage(const SparsePrecoder& p, const ComplexVector& s);
ComplexVector apply_two_stage(const SparsePrecoder& p, const ComplexVector& s,
                              const FftPlan& plan);

// Dense application x = P s; beamspace-domain dense precoders get the
// inverse FFT afterwards.
ComplexVector apply_dense(const DensePrecoder& p, const ComplexVector& s);

// Documented JSON form (structure tag, supports, interleaved re/im values).
std::string to_json(const SparsePrecoder& p);
SparsePrecoder sparse_precoder_from_json(const std::string& text);

}  // namespace sbprec
