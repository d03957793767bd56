/**
 * @file bench_kernels.cpp
 * @brief OpenMP kernels vs their serial references, and the two-stage
 *        application path vs a dense matvec.
 *
 * Run ./bench/bench_kernels --benchmark_min_time=0.5; thread count for the
 * parallel variants comes from OMP_NUM_THREADS.
 */
#include <benchmark/benchmark.h>

#include <cstdint>

#include "sbprec/channel.hpp"
#include "sbprec/constellation.hpp"
#include "sbprec/precoder.hpp"
#include "sbprec/rng.hpp"
#include "sbprec/simulation.hpp"

using namespace sbprec;

namespace {

constexpr std::size_t kB = 128;
constexpr std::size_t kU = 16;
constexpr std::size_t kK = 16;
constexpr double kKappa = 0.16;  // U * N0 at 20 dB

const BeamspaceChannel& fixture_channel() {
  static const BeamspaceChannel hbar = [] {
    ChannelGenConfig cfg;
    cfg.B = kB;
    cfg.U = kU;
    cfg.seed = 1;
    Rng rng(1);
    return to_beamspace_tx(generate_channel(cfg, rng).H);
  }();
  return hbar;
}

void bm_sbp_parallel(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbp(hbar, kKappa, kK));
  }
}
BENCHMARK(bm_sbp_parallel);

void bm_sbp_serial(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbp_serial(hbar, kKappa, kK));
  }
}
BENCHMARK(bm_sbp_serial);

void bm_one_shot_sbp_parallel(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(one_shot_sbp(hbar, kKappa, kK));
  }
}
BENCHMARK(bm_one_shot_sbp_parallel);

void bm_one_shot_sbp_serial(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(one_shot_sbp_serial(hbar, kKappa, kK));
  }
}
BENCHMARK(bm_one_shot_sbp_serial);

SimConfig sweep_config() {
  SimConfig cfg;
  cfg.B = 64;
  cfg.U = 8;
  cfg.K = 8;
  cfg.snr_db = {12.0};
  cfg.trials = 16;
  cfg.T = 6;
  cfg.precoder = PrecoderType::kSbp;
  cfg.seed = 1;
  cfg.channel.B = cfg.B;
  cfg.channel.U = cfg.U;
  cfg.channel.seed = cfg.seed;
  return cfg;
}

void bm_sweep_parallel(benchmark::State& state) {
  const SimConfig cfg = sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ber_sweep(cfg, 0));
  }
}
BENCHMARK(bm_sweep_parallel);

void bm_sweep_serial(benchmark::State& state) {
  const SimConfig cfg = sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ber_sweep_serial(cfg));
  }
}
BENCHMARK(bm_sweep_serial);

// The motivating comparison: sparse two-stage application against a dense
// antenna-domain matvec of the same precoder.
void bm_apply_two_stage(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  const SparsePrecoder p = sbp(hbar, kKappa, kK);
  const FftPlan plan(kB);
  Rng rng(2);
  const Constellation con(64);
  std::vector<std::uint8_t> bits(kU * con.bits_per_symbol());
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bit());
  const ComplexVector s = con.modulate(bits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_two_stage(p, s, plan));
  }
}
BENCHMARK(bm_apply_two_stage);

void bm_apply_dense(benchmark::State& state) {
  const BeamspaceChannel& hbar = fixture_channel();
  const SparsePrecoder sparse = sbp(hbar, kKappa, kK);
  // Same precoder, pre-rotated to the antenna domain: x = P s.
  const ComplexMatrix dense_beam = sparse.densify();
  ComplexMatrix dense(kB, kU);
  const FftPlan plan(kB);
  for (std::size_t u = 0; u < kU; ++u) {
    ComplexVector col(kB);
    for (std::size_t b = 0; b < kB; ++b) col[b] = dense_beam(b, u);
    plan.inverse(col.data());
    for (std::size_t b = 0; b < kB; ++b) dense(b, u) = col[b];
  }
  const DensePrecoder p{dense, PrecoderDomain::kAntenna, sparse.beta};
  Rng rng(2);
  const Constellation con(64);
  std::vector<std::uint8_t> bits(kU * con.bits_per_symbol());
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bit());
  const ComplexVector s = con.modulate(bits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_dense(p, s));
  }
}
BENCHMARK(bm_apply_dense);

}  // namespace

BENCHMARK_MAIN();
