/**
 * @file constellation.hpp
 * @brief Gray-coded square QAM with unit average symbol energy.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "sbprec/types.hpp"

namespace sbprec {

// Square M-QAM (M in {4, 16, 64, 256}); labels are Gray-coded per axis so
// axis-adjacent points differ in exactly one bit. Mean point energy is 1.
class Constellation {
 public:
  explicit Constellation(unsigned order);

  unsigned order() const { return order_; }
  unsigned bits_per_symbol() const { return bits_per_symbol_; }

  // Point for a label (value of the bit pattern, MSB first: I bits then Q bits).
  cplx point(unsigned label) const { return points_[label]; }
  const std::vector<cplx>& points() const { return points_; }

  // Nearest-point label by per-axis slicing (exact for square QAM).
  unsigned slice(cplx s) const;

  // bits.size() must be a multiple of bits_per_symbol(); one symbol per group.
  ComplexVector modulate(const std::vector<std::uint8_t>& bits) const;
  std::vector<std::uint8_t> demodulate_hard(const ComplexVector& symbols) const;

  // Positive corner point normalized to unit energy; used as the pilot symbol.
  cplx pilot_symbol() const;

  double min_distance() const;

 private:
  unsigned order_;
  unsigned bits_per_symbol_;
  unsigned side_;       // points per axis
  double scale_;        // level spacing / 2
  std::vector<cplx> points_;
};

}  // namespace sbprec
