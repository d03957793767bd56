/**
 * @file config.cpp
 * @brief Strict experiment-config parsing and run expansion.
 */
#include "sbprec/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace sbprec {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string item_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      fail("unknown key \"" + (path.empty() ? it.key() : path + "." + it.key()) +
           "\" (strict schema; check docs/formats.md)");
    }
  }
}

std::uint64_t get_count(const json& obj, const std::string& path, const std::string& key,
                        std::uint64_t fallback, bool required = false) {
  if (!obj.contains(key)) {
    if (required) fail("missing required key \"" + key + "\"");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    fail("\"" + (path.empty() ? key : path + "." + key) + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double get_real(const json& obj, const std::string& path, const std::string& key,
                double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    fail("\"" + (path.empty() ? key : path + "." + key) + "\" must be a number");
  }
  return v.get<double>();
}

bool get_flag(const json& obj, const std::string& path, const std::string& key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    fail("\"" + (path.empty() ? key : path + "." + key) + "\" must be true or false");
  }
  return v.get<bool>();
}

ChannelGenConfig parse_channel(const json& obj) {
  ChannelGenConfig ch;
  reject_unknown_keys(obj, "channel",
                      {"L", "los", "epsilon", "sector_halfangle_deg",
                       "min_separation_deg", "min_dist_m", "max_dist_m"});
  ch.los = get_flag(obj, "channel", "los", ch.los);
  // Denser multipath by default when no line of sight: L = 4 (LoS), 8 (nLoS).
  ch.L = get_count(obj, "channel", "L", ch.los ? 4 : 8);
  ch.epsilon = get_real(obj, "channel", "epsilon", ch.epsilon);
  ch.sector_halfangle_deg = get_real(obj, "channel", "sector_halfangle_deg", ch.sector_halfangle_deg);
  ch.min_separation_deg = get_real(obj, "channel", "min_separation_deg", ch.min_separation_deg);
  ch.min_dist_m = get_real(obj, "channel", "min_dist_m", ch.min_dist_m);
  ch.max_dist_m = get_real(obj, "channel", "max_dist_m", ch.max_dist_m);

  if (ch.L < 1) fail("\"channel.L\" = " + std::to_string(ch.L) + " must satisfy L >= 1");
  if (!(ch.epsilon >= 0.0 && ch.epsilon <= 1.0)) {
    fail("\"channel.epsilon\" must satisfy 0 <= epsilon <= 1");
  }
  if (!(ch.sector_halfangle_deg > 0.0 && ch.sector_halfangle_deg <= 90.0)) {
    fail("\"channel.sector_halfangle_deg\" must lie in (0, 90]");
  }
  if (!(ch.min_separation_deg > 0.0)) fail("\"channel.min_separation_deg\" must be > 0");
  if (!(ch.min_dist_m > 0.0 && ch.max_dist_m > ch.min_dist_m)) {
    fail("\"channel.min_dist_m\"/\"channel.max_dist_m\" must satisfy 0 < min < max");
  }
  return ch;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') ++line;
    }
    fail("config is not valid JSON (line " + std::to_string(line) + "): " + e.what());
  }
  if (!root.is_object()) fail("config root must be a JSON object");

  reject_unknown_keys(root, "",
                      {"B", "U", "snr_db", "trials", "T", "seed", "constellation",
                       "precoders", "K", "channel"});

  ExperimentConfig cfg;
  cfg.B = get_count(root, "", "B", 0, /*required=*/true);
  cfg.U = get_count(root, "", "U", 0, /*required=*/true);
  cfg.trials = get_count(root, "", "trials", 0, /*required=*/true);
  cfg.T = get_count(root, "", "T", cfg.T);
  cfg.seed = get_count(root, "", "seed", cfg.seed);
  cfg.constellation = get_count(root, "", "constellation", cfg.constellation);

  if (!root.contains("snr_db")) fail("missing required key \"snr_db\"");
  const json& grid = root.at("snr_db");
  if (!grid.is_array() || grid.empty()) fail("\"snr_db\" must be a non-empty array of numbers");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!grid[i].is_number()) fail("\"" + item_path("snr_db", i) + "\" must be a number");
    cfg.snr_db.push_back(grid[i].get<double>());
  }

  if (!root.contains("precoders")) fail("missing required key \"precoders\"");
  const json& precs = root.at("precoders");
  if (!precs.is_array() || precs.empty()) {
    fail("\"precoders\" must be a non-empty array of precoder names");
  }
  for (std::size_t i = 0; i < precs.size(); ++i) {
    if (!precs[i].is_string()) fail("\"" + item_path("precoders", i) + "\" must be a string");
    const std::string name = precs[i].get<std::string>();
    const std::optional<PrecoderType> t = precoder_from_name(name);
    if (!t) {
      fail("\"" + item_path("precoders", i) + "\" = \"" + name +
           "\" is not one of WF, MRT, SBP, RS, 1S-SBP, 1S-RS");
    }
    if (std::find(cfg.precoders.begin(), cfg.precoders.end(), *t) != cfg.precoders.end()) {
      fail("\"precoders\" lists \"" + name + "\" twice");
    }
    cfg.precoders.push_back(*t);
  }

  if (root.contains("K")) {
    const json& ks = root.at("K");
    if (!ks.is_array() || ks.empty()) fail("\"K\" must be a non-empty array of integers");
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (!ks[i].is_number_unsigned()) {
        fail("\"" + item_path("K", i) + "\" must be a non-negative integer");
      }
      const std::uint64_t k = ks[i].get<std::uint64_t>();
      if (std::find(cfg.sparsity.begin(), cfg.sparsity.end(), k) != cfg.sparsity.end()) {
        fail("\"K\" lists " + std::to_string(k) + " twice");
      }
      cfg.sparsity.push_back(static_cast<std::size_t>(k));
    }
  }

  if (root.contains("channel")) {
    if (!root.at("channel").is_object()) fail("\"channel\" must be an object");
    cfg.channel = parse_channel(root.at("channel"));
  }
  cfg.channel.B = cfg.B;
  cfg.channel.U = cfg.U;
  cfg.channel.seed = cfg.seed;

  // Bounds. Each message names the violated constraint.
  if (cfg.B < 1 || (cfg.B & (cfg.B - 1)) != 0) {
    fail("\"B\" = " + std::to_string(cfg.B) + " must be a power of two");
  }
  if (cfg.U < 1) fail("\"U\" must satisfy U >= 1");
  if (cfg.U > cfg.B) {
    fail("\"U\" = " + std::to_string(cfg.U) + " must satisfy U <= B = " + std::to_string(cfg.B));
  }
  if (cfg.trials < 1) fail("\"trials\" must satisfy trials >= 1");
  if (cfg.T < 2) fail("\"T\" = " + std::to_string(cfg.T) + " must satisfy T >= 2 (pilot + data)");
  if (cfg.constellation != 4 && cfg.constellation != 16 && cfg.constellation != 64 &&
      cfg.constellation != 256) {
    fail("\"constellation\" = " + std::to_string(cfg.constellation) + " must be 4, 16, 64 or 256");
  }
  for (std::size_t i = 0; i < cfg.sparsity.size(); ++i) {
    const std::size_t k = cfg.sparsity[i];
    if (k < 1 || k > cfg.B) {
      fail("\"" + item_path("K", i) + "\" = " + std::to_string(k) +
           " must satisfy 1 <= K <= B = " + std::to_string(cfg.B));
    }
  }
  const bool any_sparse = std::any_of(cfg.precoders.begin(), cfg.precoders.end(),
                                      [](PrecoderType t) { return precoder_is_sparse(t); });
  if (any_sparse && cfg.sparsity.empty()) {
    fail("\"K\" is required when \"precoders\" contains a sparse precoder");
  }
  const double sector_width = 2.0 * cfg.channel.sector_halfangle_deg;
  if (static_cast<double>(cfg.U) * cfg.channel.min_separation_deg >= sector_width) {
    fail("\"U\" * \"channel.min_separation_deg\" = " +
         std::to_string(static_cast<double>(cfg.U) * cfg.channel.min_separation_deg) +
         " must be < sector width = " + std::to_string(sector_width) + " deg");
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_experiment_config(buf.str());
  } catch (const ConfigError& e) {
    fail(path + ": " + e.what());
  }
}

std::string canonical_config_json(const ExperimentConfig& cfg) {
  json root;  // nlohmann objects keep keys sorted, which is the canonical order
  root["B"] = cfg.B;
  root["U"] = cfg.U;
  root["snr_db"] = cfg.snr_db;
  root["trials"] = cfg.trials;
  root["T"] = cfg.T;
  root["seed"] = cfg.seed;
  root["constellation"] = cfg.constellation;
  json precs = json::array();
  for (PrecoderType t : cfg.precoders) precs.push_back(precoder_name(t));
  root["precoders"] = std::move(precs);
  root["K"] = cfg.sparsity;
  root["channel"] = {{"L", cfg.channel.L},
                     {"los", cfg.channel.los},
                     {"epsilon", cfg.channel.epsilon},
                     {"sector_halfangle_deg", cfg.channel.sector_halfangle_deg},
                     {"min_separation_deg", cfg.channel.min_separation_deg},
                     {"min_dist_m", cfg.channel.min_dist_m},
                     {"max_dist_m", cfg.channel.max_dist_m}};
  return root.dump();
}

std::vector<PlannedRun> expand_runs(const ExperimentConfig& cfg) {
  std::vector<PlannedRun> runs;
  SimConfig base;
  base.B = cfg.B;
  base.U = cfg.U;
  base.snr_db = cfg.snr_db;
  base.trials = cfg.trials;
  base.T = cfg.T;
  base.constellation_order = static_cast<unsigned>(cfg.constellation);
  base.channel = cfg.channel;
  base.seed = cfg.seed;

  for (PrecoderType t : cfg.precoders) {
    const std::vector<std::size_t> levels =
        precoder_is_sparse(t) ? cfg.sparsity : std::vector<std::size_t>{0};
    for (std::size_t k : levels) {
      PlannedRun run;
      run.precoder = t;
      run.K = k;
      run.sim = base;
      run.sim.precoder = t;
      run.sim.K = precoder_is_sparse(t) ? k : 0;
      run.csv_name = std::string("ber_") + precoder_name(t) + "_K" + std::to_string(k) + ".csv";
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

}  // namespace sbprec
