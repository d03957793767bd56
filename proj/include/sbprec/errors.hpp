/**
 * @file errors.hpp
 * @brief Exception types for well-defined failure modes.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace sbprec {

// Thrown when a kappa = 0 normal-equation system is numerically singular.
struct SingularSystemError : std::runtime_error {
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when UE placement cannot satisfy the minimum angular separation.
struct PlacementError : std::runtime_error {
  explicit PlacementError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a pilot observation is too small to invert; the Monte-Carlo
// engine catches this, discards the trial and records it.
struct DegeneratePilotError : std::runtime_error {
  explicit DegeneratePilotError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbprec
