/**
 * @file simulation.hpp
 * @brief Downlink Monte-Carlo engine: pilot-equalized transmission, hard
 *        detection and BER aggregation over seeded independent trials.
 *
 * Trials are independent work items: trial t draws everything from rng
 * stream t, so sweeps are reproducible bit-for-bit for any thread count
 * (counts are reduced with integer sums). run_ber_sweep_serial is the
 * single-thread reference; run_ber_sweep runs the identical trials under
 * OpenMP.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbprec/channel.hpp"
#include "sbprec/constellation.hpp"
#include "sbprec/types.hpp"

namespace sbprec {

enum class PrecoderType { kWf, kMrt, kSbp, kRs, kOneShotSbp, kOneShotRs };

const char* precoder_name(PrecoderType t);
std::optional<PrecoderType> precoder_from_name(const std::string& name);
bool precoder_is_sparse(PrecoderType t);

struct SimConfig {
  std::size_t B = 128;
  std::size_t U = 16;
  std::size_t K = 16;               // sparsity level; ignored by WF/MRT
  std::vector<double> snr_db;       // normalized transmit power rho^2/N0 grid
  std::size_t trials = 100;         // channel realizations per SNR point
  std::size_t T = 10;               // slots per realization, first is the pilot
  PrecoderType precoder = PrecoderType::kWf;
  unsigned constellation_order = 64;
  ChannelGenConfig channel;
  std::uint64_t seed = 0;
};

struct BerPoint {
  double snr_db = 0.0;
  double ber = 0.0;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits_total = 0;
  std::uint64_t trials_discarded = 0;
};

// y = H x + n with n i.i.d. CN(0, N0).
ComplexVector transmit(const ComplexMatrix& H, const ComplexVector& x, double n0, Rng& rng);

// One-shot zero-forcing estimate of the UE-side precoding factor from its
// pilot observation. Throws DegeneratePilotError for |y_pilot| < 1e-15.
cplx estimate_beta_u(cplx y_pilot, cplx s_pilot);

// Sweeps the SNR grid; rho^2 is fixed at 1 and N0 = 10^(-snr_db/10).
// Precoders are built from the estimated channel with kappa = U N0 / rho^2;
// transmission runs through the true channel. threads <= 0 uses all cores.
std::vector<BerPoint> run_ber_sweep(const SimConfig& cfg, int threads);
std::vector<BerPoint> run_ber_sweep_serial(const SimConfig& cfg);

// Fixed column order: precoder,K,snr_db,ber,bit_errors,bits_total,trials_discarded.
// K is written as 0 for the dense baselines.
void write_ber_csv(std::ostream& os, const SimConfig& cfg, const std::vector<BerPoint>& points);

}  // namespace sbprec
