/**
 * @file channel.cpp
 * @brief Plane-wave channel generation, estimation error model, beamspace transform.
 */
#include "sbprec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sbprec/errors.hpp"
#include "sbprec/fft.hpp"

namespace sbprec {

namespace {

constexpr int kMaxPlacementTries = 10000;
constexpr double kDeg2Rad = std::numbers::pi / 180.0;

// Reflection paths average 10 dB below the dominant LoS path.
constexpr double kReflectionPower = 0.1;

// Uniform placement angles with pairwise minimum separation, by rejection.
std::vector<double> place_ues(const ChannelGenConfig& cfg, Rng& rng) {
  const double half = cfg.sector_halfangle_deg;
  if (static_cast<double>(cfg.U) * cfg.min_separation_deg >= 2.0 * half) {
    throw PlacementError("cannot place " + std::to_string(cfg.U) + " UEs with " +
                         std::to_string(cfg.min_separation_deg) +
                         " deg separation in a " + std::to_string(2.0 * half) +
                         " deg sector");
  }
  std::vector<double> theta_deg;
  theta_deg.reserve(cfg.U);
  for (std::size_t u = 0; u < cfg.U; ++u) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxPlacementTries; ++attempt) {
      const double cand = rng.uniform(-half, half);
      bool ok = true;
      for (double t : theta_deg) {
        if (std::abs(cand - t) < cfg.min_separation_deg) {
          ok = false;
          break;
        }
      }
      if (ok) {
        theta_deg.push_back(cand);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw PlacementError("UE placement failed after " +
                           std::to_string(kMaxPlacementTries) + " rejection rounds");
  }
  return theta_deg;
}

}  // namespace

ComplexVector steering_vector(double phi, std::size_t B) {
  if (B < 1) throw std::invalid_argument("steering_vector: B must be >= 1");
  ComplexVector a(B);
  for (std::size_t b = 0; b < B; ++b) {
    const double ang = static_cast<double>(b) * phi;
    a[b] = {std::cos(ang), std::sin(ang)};
  }
  return a;
}

ComplexMatrix channel_from_paths(const std::vector<PathSet>& per_ue_paths, std::size_t B) {
  ComplexMatrix h(per_ue_paths.size(), B);
  for (std::size_t u = 0; u < per_ue_paths.size(); ++u) {
    const PathSet& p = per_ue_paths[u];
    if (p.gains.size() != p.spatial_freqs.size() || p.gains.empty())
      throw std::invalid_argument("channel_from_paths: malformed path set");
    for (std::size_t l = 0; l < p.count(); ++l) {
      const ComplexVector a = steering_vector(p.spatial_freqs[l], B);
      for (std::size_t b = 0; b < B; ++b) h(u, b) += p.gains[l] * a[b];
    }
  }
  return h;
}

ChannelRealization generate_channel(const ChannelGenConfig& cfg, Rng& rng) {
  if (cfg.U < 1 || cfg.B < 1 || cfg.L < 1)
    throw std::invalid_argument("generate_channel: B, U, L must be >= 1");

  const std::vector<double> theta_deg = place_ues(cfg, rng);
  const double half_rad = cfg.sector_halfangle_deg * kDeg2Rad;
  // Reference distance: the scale is arbitrary once power control runs, the
  // geometric midpoint just keeps gains near unit magnitude.
  const double d0 = std::sqrt(cfg.min_dist_m * cfg.max_dist_m);

  std::vector<PathSet> paths(cfg.U);
  for (std::size_t u = 0; u < cfg.U; ++u) {
    const double dist = rng.uniform(cfg.min_dist_m, cfg.max_dist_m);
    const double amp = d0 / dist;
    PathSet& p = paths[u];
    p.gains.reserve(cfg.L);
    p.spatial_freqs.reserve(cfg.L);
    if (cfg.los) {
      // Dominant path at the placement angle, unit magnitude, uniform phase.
      const double psi = rng.uniform(0.0, 2.0 * std::numbers::pi);
      p.gains.push_back(amp * cplx{std::cos(psi), std::sin(psi)});
      p.spatial_freqs.push_back(std::numbers::pi * std::sin(theta_deg[u] * kDeg2Rad));
      for (std::size_t l = 1; l < cfg.L; ++l) {
        const double th = rng.uniform(-half_rad, half_rad);
        p.gains.push_back(amp * std::sqrt(kReflectionPower) * rng.standard_complex_gaussian());
        p.spatial_freqs.push_back(std::numbers::pi * std::sin(th));
      }
    } else {
      for (std::size_t l = 0; l < cfg.L; ++l) {
        const double th = rng.uniform(-half_rad, half_rad);
        p.gains.push_back(amp * rng.standard_complex_gaussian());
        p.spatial_freqs.push_back(std::numbers::pi * std::sin(th));
      }
    }
  }

  ComplexMatrix h = channel_from_paths(paths, cfg.B);

  // Power control: clamp row norms into a 6 dB band around the geometric
  // mean, rescaling the recorded path gains consistently.
  const double spread = std::pow(10.0, kPowerControlSpreadDb / 20.0);
  std::vector<double> norms(cfg.U);
  double log_sum = 0.0;
  for (std::size_t u = 0; u < cfg.U; ++u) {
    double s = 0.0;
    for (std::size_t b = 0; b < cfg.B; ++b) s += std::norm(h(u, b));
    norms[u] = std::sqrt(s);
    log_sum += std::log(norms[u]);
  }
  const double gmean = std::exp(log_sum / static_cast<double>(cfg.U));
  const double lo = gmean / std::sqrt(spread);
  const double hi = gmean * std::sqrt(spread);
  for (std::size_t u = 0; u < cfg.U; ++u) {
    double target = norms[u];
    if (target < lo) target = lo;
    if (target > hi) target = hi;
    if (target != norms[u]) {
      const double c = target / norms[u];
      for (std::size_t b = 0; b < cfg.B; ++b) h(u, b) *= c;
      for (cplx& g : paths[u].gains) g *= c;
    }
  }

  return ChannelRealization{std::move(h), std::move(paths), cfg.B, cfg.U};
}

ComplexMatrix estimate_channel(const ComplexMatrix& H, double epsilon, Rng& rng) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("estimate_channel: epsilon must be in [0,1]");
  const double a = std::sqrt(1.0 - epsilon);
  const double b = std::sqrt(epsilon);
  ComplexMatrix hhat(H.rows(), H.cols());
  for (std::size_t r = 0; r < H.rows(); ++r)
    for (std::size_t c = 0; c < H.cols(); ++c)
      hhat(r, c) = a * H(r, c) + b * rng.standard_complex_gaussian();
  return hhat;
}

BeamspaceChannel to_beamspace(const ComplexMatrix& H) {
  FftPlan plan(H.cols());
  ComplexMatrix hbar = H;
  for (std::size_t u = 0; u < H.rows(); ++u) plan.forward(hbar.row(u));
  return BeamspaceChannel{std::move(hbar)};
}

BeamspaceChannel to_beamspace_tx(const ComplexMatrix& H) {
  FftPlan plan(H.cols());
  ComplexMatrix hbar = H;
  for (std::size_t u = 0; u < H.rows(); ++u) {
    cplx* row = hbar.row(u);  // v F^H = conj(conj(v) F)
    for (std::size_t b = 0; b < H.cols(); ++b) row[b] = std::conj(row[b]);
    plan.forward(row);
    for (std::size_t b = 0; b < H.cols(); ++b) row[b] = std::conj(row[b]);
  }
  return BeamspaceChannel{std::move(hbar)};
}

}  // namespace sbprec
