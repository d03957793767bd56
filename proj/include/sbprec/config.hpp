/**
 * @file config.hpp
 * @brief Experiment definition file: schema, strict parsing, run expansion.
 *
 * A single JSON tree describes one BER experiment (system size, SNR grid,
 * precoder list, sparsity levels, channel model knobs). Parsing is strict:
 * unknown keys, wrong types, and out-of-range values are all rejected with a
 * diagnostic naming the offending field and the violated bound.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbprec/channel.hpp"
#include "sbprec/simulation.hpp"

namespace sbprec {

// Raised for malformed syntax, unknown keys, type mismatches and violated
// bounds. what() carries the field path (e.g. "channel.L") or line number.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::size_t B = 128;
  std::size_t U = 16;
  std::vector<double> snr_db;
  std::size_t trials = 100;
  std::size_t T = 10;
  std::uint64_t seed = 1;
  std::size_t constellation = 64;
  std::vector<PrecoderType> precoders;
  std::vector<std::size_t> sparsity;  // K grid, applies to the sparse precoders
  ChannelGenConfig channel;
};

// Parses and validates a config document. Throws ConfigError.
ExperimentConfig parse_experiment_config(const std::string& text);

// Reads the file at `path` and parses it. Throws ConfigError (also for I/O).
ExperimentConfig load_experiment_config(const std::string& path);

// Canonical serialization (sorted keys, defaults filled in): two documents
// that parse to the same experiment produce the same string.
std::string canonical_config_json(const ExperimentConfig& cfg);

// One BER sweep: a (precoder, K) combination expanded from the config.
struct PlannedRun {
  PrecoderType precoder;
  std::size_t K = 0;  // 0 for the dense precoders
  SimConfig sim;
  std::string csv_name;  // ber_<precoder>_K<K>.csv
};

// Dense precoders get one run each (K recorded as 0); sparse precoders get
// one run per configured sparsity level, in file order.
std::vector<PlannedRun> expand_runs(const ExperimentConfig& cfg);

}  // namespace sbprec
