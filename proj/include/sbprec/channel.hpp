/**
 * @file channel.hpp
 * @brief Synthetic plane-wave mmWave channel generation and beamspace transform.
 *
 * Each UE row is a superposition of L complex sinusoids, h_u = sum_l a_l *
 * [1, e^{j phi_l}, ..., e^{j (B-1) phi_l}], with phi = pi sin(theta) for a
 * half-wavelength ULA. Rows are power-controlled into a 6 dB spread.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbprec/rng.hpp"
#include "sbprec/types.hpp"

namespace sbprec {

// Per-UE propagation paths: complex gains and spatial frequencies (radians).
struct PathSet {
  std::vector<cplx> gains;
  std::vector<double> spatial_freqs;

  std::size_t count() const { return gains.size(); }
};

struct ChannelRealization {
  ComplexMatrix H;  // U x B antenna-domain channel
  std::vector<PathSet> per_ue_paths;
  std::size_t B = 0;
  std::size_t U = 0;
};

struct BeamspaceChannel {
  ComplexMatrix Hbar;  // H * F_B, rows sparse for directional channels
};

struct ChannelGenConfig {
  std::size_t B = 128;
  std::size_t U = 16;
  std::size_t L = 4;  // paths per UE; defaults: 4 (LoS), 8 (nLoS)
  double sector_halfangle_deg = 60.0;
  double min_separation_deg = 1.0;
  double min_dist_m = 25.0;
  double max_dist_m = 112.0;
  bool los = true;
  double epsilon = 0.0099;
  std::uint64_t seed = 0;
};

// Maximum row-norm spread after power control: 6 dB.
inline constexpr double kPowerControlSpreadDb = 6.0;

// a(phi) with entries exp(j b phi), b = 0..B-1.
ComplexVector steering_vector(double phi, std::size_t B);

// Builds the U x B channel matrix from explicit path sets.
ComplexMatrix channel_from_paths(const std::vector<PathSet>& per_ue_paths, std::size_t B);

// Draws UE placements, paths and gains, applies power control. Deterministic
// for a given rng state. Throws PlacementError when the minimum separation
// cannot be met.
ChannelRealization generate_channel(const ChannelGenConfig& cfg, Rng& rng);

// Hhat = sqrt(1-eps) H + sqrt(eps) Z with Z entries i.i.d. CN(0,1).
ComplexMatrix estimate_channel(const ComplexMatrix& H, double epsilon, Rng& rng);

// Applies the B-point FFT to each row: Hbar = H F_B.
BeamspaceChannel to_beamspace(const ComplexMatrix& H);

// H F_B^H: the channel seen by beamspace transmit vectors when the two-stage
// chain converts them to the antenna domain as x = F_B^H xbar. Identical to
// to_beamspace up to the beam reindexing b -> (B - b) mod B, so row sparsity
// is preserved; precoders applied through apply_two_stage must be designed
// on this representation.
BeamspaceChannel to_beamspace_tx(const ComplexMatrix& H);

}  // namespace sbprec
