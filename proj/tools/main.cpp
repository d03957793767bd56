/**
 * @file main.cpp
 * @brief sbprec command-line tool: `ber`, `complexity`, `precoder-dump`.
 *
 * Exit codes: 0 success, 2 bad flags or config validation failure, 3 runtime
 * failure during a simulation. Output directory defaults to $SBPREC_OUTDIR,
 * then the current directory; CSV schemas are documented in docs/formats.md.
 */
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sbprec/complexity.hpp"
#include "sbprec/config.hpp"
#include "sbprec/manifest.hpp"
#include "sbprec/precoder.hpp"
#include "sbprec/simulation.hpp"

namespace fs = std::filesystem;
using namespace sbprec;

namespace {

std::string default_out_dir() {
  const char* env = std::getenv("SBPREC_OUTDIR");
  return (env && *env) ? env : ".";
}

struct BerArgs {
  std::string config_path;
  std::string out_dir = default_out_dir();
  int threads = 0;  // <= 0: all cores
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

int run_ber(const BerArgs& args) {
  ExperimentConfig cfg = load_experiment_config(args.config_path);
  if (args.seed) {
    cfg.seed = *args.seed;
    cfg.channel.seed = *args.seed;
  }
  if (args.trials) {
    if (*args.trials < 1) throw ConfigError("--trials must satisfy trials >= 1");
    cfg.trials = static_cast<std::size_t>(*args.trials);
  }

  RunManifest manifest;
  manifest.config_hash = config_hash(cfg);
  manifest.seed = cfg.seed;
  manifest.started_utc = utc_timestamp();

  fs::create_directories(args.out_dir);
  for (const PlannedRun& run : expand_runs(cfg)) {
    const std::vector<BerPoint> points = run_ber_sweep(run.sim, args.threads);
    const fs::path csv_path = fs::path(args.out_dir) / run.csv_name;
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + csv_path.string());
    write_ber_csv(out, run.sim, points);
    manifest.outputs.push_back(run.csv_name);
    std::cout << "wrote " << csv_path.string() << " (" << points.size() << " SNR points)\n";
  }

  manifest.finished_utc = utc_timestamp();
  const fs::path manifest_path = fs::path(args.out_dir) / "manifest.json";
  std::ofstream mout(manifest_path, std::ios::binary);
  if (!mout) throw std::runtime_error("cannot open output file: " + manifest_path.string());
  write_manifest_json(mout, manifest);
  std::cout << "wrote " << manifest_path.string() << "\n";
  return 0;
}

struct ComplexityArgs {
  std::int64_t B = 128;
  std::int64_t U = 16;
  std::int64_t K = 16;
  std::int64_t M = -1;  // -1: default to K
  std::vector<std::int64_t> t_grid = {1, 10, 100, 1000, 10000, 100000, 1000000};
  std::string out_dir = default_out_dir();
};

int run_complexity(const ComplexityArgs& args) {
  auto flag_error = [](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
  };
  if (args.B < 1 || (args.B & (args.B - 1)) != 0) {
    return flag_error("--B = " + std::to_string(args.B) + " must be a power of two");
  }
  if (args.U < 1) return flag_error("--U must satisfy U >= 1");
  if (args.K < 1 || args.K > args.B) {
    return flag_error("--K = " + std::to_string(args.K) +
                      " must satisfy 1 <= K <= B = " + std::to_string(args.B));
  }
  if (args.M < -1) return flag_error("--M must be >= 0");
  for (std::int64_t t : args.t_grid) {
    if (t < 1) return flag_error("--T entries must satisfy T >= 1");
  }

  ComplexityInput in;
  in.B = args.B;
  in.U = args.U;
  in.K = args.K;
  in.M = args.M < 0 ? args.K : args.M;
  const ComplexityReport report = build_complexity_report(in, args.t_grid);

  fs::create_directories(args.out_dir);
  const std::string name = "complexity_B" + std::to_string(args.B) + "_U" +
                           std::to_string(args.U) + "_K" + std::to_string(args.K) + ".csv";
  const fs::path csv_path = fs::path(args.out_dir) / name;
  std::ofstream out(csv_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + csv_path.string());
  write_complexity_csv(out, report);

  std::printf("gamma = %.4f\n", report.gamma);
  std::cout << "note: LocalWF row is formula-only (M = " << in.M << " supplied, not measured)\n";
  std::cout << "wrote " << csv_path.string() << "\n";
  return 0;
}

struct DumpArgs {
  std::size_t B = 128;
  std::size_t U = 16;
  std::size_t K = 16;
  std::string precoder = "SBP";
  std::uint64_t seed = 0;
  double snr_db = 20.0;
  bool nlos = false;
  std::optional<std::size_t> L;
  double epsilon = 0.0;
  std::string out_path;  // empty: stdout
};

int run_precoder_dump(const DumpArgs& args) {
  const std::optional<PrecoderType> type = precoder_from_name(args.precoder);
  if (!type || !precoder_is_sparse(*type)) {
    std::cerr << "error: --precoder must be one of SBP, RS, 1S-SBP, 1S-RS\n";
    return 2;
  }
  if (args.K < 1 || args.K > args.B) {
    std::cerr << "error: --K = " << args.K << " must satisfy 1 <= K <= B = " << args.B << "\n";
    return 2;
  }

  ChannelGenConfig ch;
  ch.B = args.B;
  ch.U = args.U;
  ch.los = !args.nlos;
  ch.L = args.L ? *args.L : (ch.los ? 4 : 8);
  ch.epsilon = args.epsilon;
  ch.seed = args.seed;

  Rng rng = Rng::stream(args.seed, 0);
  const ChannelRealization real = generate_channel(ch, rng);
  const ComplexMatrix hhat = estimate_channel(real.H, args.epsilon, rng);
  const BeamspaceChannel hbar = to_beamspace_tx(hhat);  // matches the IFFT transmit chain

  const double n0 = std::pow(10.0, -args.snr_db / 10.0);
  const double kappa = static_cast<double>(args.U) * n0;

  SparsePrecoder p;
  switch (*type) {
    case PrecoderType::kSbp: p = sbp(hbar, kappa, args.K); break;
    case PrecoderType::kRs: p = rs(hbar, kappa, args.K); break;
    case PrecoderType::kOneShotSbp: p = one_shot_sbp(hbar, kappa, args.K); break;
    case PrecoderType::kOneShotRs: p = one_shot_rs(hbar, kappa, args.K); break;
    default: break;
  }

  const std::string text = to_json(p);
  if (args.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + args.out_path);
    out << text << "\n";
    std::cout << "wrote " << args.out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse beamspace precoding: BER sweeps and complexity reports"};
  app.set_version_flag("--version", kArtifactVersion);
  app.require_subcommand(1);

  BerArgs ber_args;
  CLI::App* ber = app.add_subcommand("ber", "Run the BER sweeps defined in a config file");
  ber->add_option("config", ber_args.config_path, "Experiment config file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  ber->add_option("--out", ber_args.out_dir, "Output directory ($SBPREC_OUTDIR or .)");
  ber->add_option("--threads", ber_args.threads, "Worker threads; <= 0 uses all cores");
  std::uint64_t seed_override = 0;
  std::uint64_t trials_override = 0;
  CLI::Option* seed_opt = ber->add_option("--seed", seed_override, "Override the config seed");
  CLI::Option* trials_opt =
      ber->add_option("--trials", trials_override, "Override the config trial count");

  ComplexityArgs cx_args;
  CLI::App* cx = app.add_subcommand("complexity", "Evaluate multiplication counts and speed-ups");
  cx->add_option("--B", cx_args.B, "BS antenna count (power of two)");
  cx->add_option("--U", cx_args.U, "UE count");
  cx->add_option("--K", cx_args.K, "Sparsity level");
  cx->add_option("--M", cx_args.M, "Average nonzeros for the LocalWF row (default: K)");
  cx->add_option("--T", cx_args.t_grid, "Coherence-block lengths (list)");
  cx->add_option("--out", cx_args.out_dir, "Output directory ($SBPREC_OUTDIR or .)");

  DumpArgs dump_args;
  CLI::App* dump =
      app.add_subcommand("precoder-dump", "Write a sparse precoder for a seeded channel as JSON");
  dump->add_option("--B", dump_args.B, "BS antenna count (power of two)");
  dump->add_option("--U", dump_args.U, "UE count");
  dump->add_option("--K", dump_args.K, "Sparsity level");
  dump->add_option("--precoder", dump_args.precoder, "SBP, RS, 1S-SBP or 1S-RS");
  dump->add_option("--seed", dump_args.seed, "Channel seed");
  dump->add_option("--snr-db", dump_args.snr_db, "Operating SNR for the ridge weight");
  dump->add_flag("--nlos", dump_args.nlos, "Draw a non-line-of-sight channel");
  std::size_t dump_l = 0;
  CLI::Option* l_opt = dump->add_option("--L", dump_l, "Paths per UE (default 4 LoS / 8 nLoS)");
  dump->add_option("--epsilon", dump_args.epsilon, "Channel estimation error in [0, 1]");
  dump->add_option("--out", dump_args.out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ber->parsed()) {
      if (seed_opt->count() > 0) ber_args.seed = seed_override;
      if (trials_opt->count() > 0) ber_args.trials = trials_override;
      return run_ber(ber_args);
    }
    if (cx->parsed()) return run_complexity(cx_args);
    if (dump->parsed()) {
      if (l_opt->count() > 0) dump_args.L = dump_l;
      return run_precoder_dump(dump_args);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
