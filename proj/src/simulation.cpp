/**
 * @file simulation.cpp
 * @brief Monte-Carlo BER engine.
 */
#include "sbprec/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sbprec/errors.hpp"
#include "sbprec/fft.hpp"
#include "sbprec/linalg.hpp"
#include "sbprec/precoder.hpp"

namespace sbprec {

const char* precoder_name(PrecoderType t) {
  switch (t) {
    case PrecoderType::kWf: return "WF";
    case PrecoderType::kMrt: return "MRT";
    case PrecoderType::kSbp: return "SBP";
    case PrecoderType::kRs: return "RS";
    case PrecoderType::kOneShotSbp: return "1S-SBP";
    case PrecoderType::kOneShotRs: return "1S-RS";
  }
  return "?";
}

std::optional<PrecoderType> precoder_from_name(const std::string& name) {
  for (PrecoderType t : {PrecoderType::kWf, PrecoderType::kMrt, PrecoderType::kSbp,
                         PrecoderType::kRs, PrecoderType::kOneShotSbp, PrecoderType::kOneShotRs})
    if (name == precoder_name(t)) return t;
  return std::nullopt;
}

bool precoder_is_sparse(PrecoderType t) {
  return t != PrecoderType::kWf && t != PrecoderType::kMrt;
}

ComplexVector transmit(const ComplexMatrix& H, const ComplexVector& x, double n0, Rng& rng) {
  if (n0 < 0.0) throw std::invalid_argument("transmit: N0 must be nonnegative");
  ComplexVector y = matvec(H, x);
  const double sigma = std::sqrt(n0);
  for (cplx& yu : y) yu += sigma * rng.standard_complex_gaussian();
  return y;
}

cplx estimate_beta_u(cplx y_pilot, cplx s_pilot) {
  if (std::abs(y_pilot) < 1e-15)
    throw DegeneratePilotError("pilot observation too small to invert");
  return s_pilot / y_pilot;
}

namespace {

struct TrialCounts {
  std::uint64_t errors = 0;
  std::uint64_t bits = 0;
  std::uint64_t discarded = 0;
};

// One block-fading trial: draw channel + estimate, build the precoder from
// the estimate, send pilot + T-1 data slots through the true channel,
// equalize with the pilot-estimated factor and count hard-decision errors.
TrialCounts run_trial(const SimConfig& cfg, const Constellation& con, double n0, double kappa,
                      std::uint64_t trial_index) {
  TrialCounts counts;
  Rng rng = Rng::stream(cfg.seed, trial_index);

  const ChannelRealization ch = generate_channel(cfg.channel, rng);
  const ComplexMatrix h_hat = estimate_channel(ch.H, cfg.channel.epsilon, rng);

  DensePrecoder dense;
  SparsePrecoder sparse;
  const bool use_sparse = precoder_is_sparse(cfg.precoder);
  if (use_sparse) {
    // Design on H F^H, the representation the IFFT transmit conversion sees.
    const BeamspaceChannel hbar = to_beamspace_tx(h_hat);
    // Trials are the parallel dimension; column builds stay serial here.
    switch (cfg.precoder) {
      case PrecoderType::kSbp: sparse = sbp_serial(hbar, kappa, cfg.K); break;
      case PrecoderType::kRs: sparse = rs(hbar, kappa, cfg.K); break;
      case PrecoderType::kOneShotSbp: sparse = one_shot_sbp_serial(hbar, kappa, cfg.K); break;
      case PrecoderType::kOneShotRs: sparse = one_shot_rs(hbar, kappa, cfg.K); break;
      default: break;
    }
  } else if (cfg.precoder == PrecoderType::kWf) {
    auto [p, beta] = normalize(wf(h_hat, kappa), 1.0, 1.0);
    dense = DensePrecoder{std::move(p), PrecoderDomain::kAntenna, beta};
  } else {
    auto [p, beta] = normalize(mrt(h_hat), 1.0, 1.0);
    dense = DensePrecoder{std::move(p), PrecoderDomain::kAntenna, beta};
  }
  const FftPlan plan(cfg.B);
  const auto apply = [&](const ComplexVector& s) {
    return use_sparse ? apply_two_stage(sparse, s, plan) : apply_dense(dense, s);
  };

  // Pilot slot: same known unit-energy symbol for every UE.
  const cplx s_pilot = con.pilot_symbol();
  const ComplexVector pilot_vec(cfg.U, s_pilot);
  const ComplexVector y_pilot = transmit(ch.H, apply(pilot_vec), n0, rng);
  ComplexVector beta_u(cfg.U);
  try {
    for (std::size_t u = 0; u < cfg.U; ++u) beta_u[u] = estimate_beta_u(y_pilot[u], s_pilot);
  } catch (const DegeneratePilotError&) {
    counts.discarded = 1;
    return counts;
  }

  const unsigned bps = con.bits_per_symbol();
  std::vector<std::uint8_t> tx_bits(cfg.U * bps);
  for (std::size_t slot = 1; slot < cfg.T; ++slot) {
    for (std::uint8_t& b : tx_bits) b = static_cast<std::uint8_t>(rng.bit());
    const ComplexVector s = con.modulate(tx_bits);
    const ComplexVector y = transmit(ch.H, apply(s), n0, rng);
    for (std::size_t u = 0; u < cfg.U; ++u) {
      const unsigned label = con.slice(beta_u[u] * y[u]);
      for (unsigned b = 0; b < bps; ++b) {
        const unsigned rx = (label >> (bps - 1 - b)) & 1u;
        counts.errors += (rx != tx_bits[u * bps + b]);
      }
    }
    counts.bits += cfg.U * bps;
  }
  return counts;
}

void validate_sim_config(const SimConfig& cfg) {
  if (cfg.T < 2) throw std::invalid_argument("SimConfig: T must be >= 2 (pilot + data)");
  if (cfg.snr_db.empty()) throw std::invalid_argument("SimConfig: empty SNR grid");
  if (cfg.trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
  if (precoder_is_sparse(cfg.precoder) && (cfg.K < 1 || cfg.K > cfg.B))
    throw std::invalid_argument("SimConfig: K must satisfy 1 <= K <= B");
  if (cfg.channel.B != cfg.B || cfg.channel.U != cfg.U)
    throw std::invalid_argument("SimConfig: channel dimensions disagree with B/U");
}

std::vector<BerPoint> sweep_impl(const SimConfig& cfg, int threads, bool parallel) {
  validate_sim_config(cfg);
  const Constellation con(cfg.constellation_order);
  constexpr double kRho2 = 1.0;

  std::vector<BerPoint> points;
  points.reserve(cfg.snr_db.size());
  for (double snr_db : cfg.snr_db) {
    const double n0 = kRho2 / std::pow(10.0, snr_db / 10.0);
    const double kappa = static_cast<double>(cfg.U) * n0 / kRho2;

    std::uint64_t errors = 0, bits = 0, discarded = 0;
    std::exception_ptr error = nullptr;
    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(threads) \
    reduction(+ : errors, bits, discarded)
      for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) {
        try {
          const TrialCounts c = run_trial(cfg, con, n0, kappa, static_cast<std::uint64_t>(t));
          errors += c.errors;
          bits += c.bits;
          discarded += c.discarded;
        } catch (...) {
#pragma omp critical
          if (!error) error = std::current_exception();
        }
      }
    } else {
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const TrialCounts c = run_trial(cfg, con, n0, kappa, t);
        errors += c.errors;
        bits += c.bits;
        discarded += c.discarded;
      }
    }
    if (error) std::rethrow_exception(error);

    BerPoint pt;
    pt.snr_db = snr_db;
    pt.bit_errors = errors;
    pt.bits_total = bits;
    pt.trials_discarded = discarded;
    pt.ber = bits > 0 ? static_cast<double>(errors) / static_cast<double>(bits) : 0.0;
    points.push_back(pt);
  }
  return points;
}

}  // namespace

std::vector<BerPoint> run_ber_sweep(const SimConfig& cfg, int threads) {
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  return sweep_impl(cfg, threads, /*parallel=*/true);
}

std::vector<BerPoint> run_ber_sweep_serial(const SimConfig& cfg) {
  return sweep_impl(cfg, 1, /*parallel=*/false);
}

void write_ber_csv(std::ostream& os, const SimConfig& cfg, const std::vector<BerPoint>& points) {
  const std::size_t k = precoder_is_sparse(cfg.precoder) ? cfg.K : 0;
  os << "precoder,K,snr_db,ber,bit_errors,bits_total,trials_discarded\n";
  char buf[256];
  for (const BerPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%.10g,%.10e,%llu,%llu,%llu\n",
                  precoder_name(cfg.precoder), k, p.snr_db, p.ber,
                  static_cast<unsigned long long>(p.bit_errors),
                  static_cast<unsigned long long>(p.bits_total),
                  static_cast<unsigned long long>(p.trials_discarded));
    os << buf;
  }
}

}  // namespace sbprec
