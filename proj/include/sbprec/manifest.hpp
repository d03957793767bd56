/**
 * @file manifest.hpp
 * @brief Run manifest: config hash, seed, version, timestamps, output list.
 *
 * Written next to the CSVs so a results directory is self-describing. The
 * config hash is FNV-1a 64 over the canonical config serialization, so it is
 * invariant to key order and formatting of the source file.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sbprec/config.hpp"

namespace sbprec {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct RunManifest {
  std::string config_hash;  // "fnv1a64:" + 16 hex digits
  std::uint64_t seed = 0;
  std::string artifact_version = kArtifactVersion;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> outputs;  // file names relative to the manifest
};

std::uint64_t fnv1a64(std::string_view bytes);

// Hash of canonical_config_json(cfg), formatted "fnv1a64:<16 hex digits>".
std::string config_hash(const ExperimentConfig& cfg);

// Current time, ISO 8601 UTC ("2026-01-02T03:04:05Z").
std::string utc_timestamp();

void write_manifest_json(std::ostream& os, const RunManifest& manifest);

}  // namespace sbprec
