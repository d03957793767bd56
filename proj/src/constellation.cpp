/**
 * @file constellation.cpp
 * @brief Gray-coded square QAM mapping and hard-decision demapping.
 */
#include "sbprec/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace sbprec {

namespace {

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

unsigned gray_decode(unsigned g) {
  unsigned v = g;
  while (g >>= 1) v ^= g;
  return v;
}

}  // namespace

Constellation::Constellation(unsigned order) : order_(order) {
  if (order != 4 && order != 16 && order != 64 && order != 256)
    throw std::invalid_argument("Constellation: order must be one of 4, 16, 64, 256");
  bits_per_symbol_ = 0;
  while ((1u << bits_per_symbol_) < order) ++bits_per_symbol_;
  side_ = 1u << (bits_per_symbol_ / 2);
  // Levels +-1, +-3, ..., +-(side-1) per axis; average energy 2(side^2-1)/3.
  scale_ = 1.0 / std::sqrt(2.0 * (static_cast<double>(side_) * side_ - 1.0) / 3.0);

  points_.resize(order);
  const unsigned axis_bits = bits_per_symbol_ / 2;
  for (unsigned label = 0; label < order; ++label) {
    const unsigned gi = label >> axis_bits;
    const unsigned gq = label & (side_ - 1);
    const unsigned pi = gray_decode(gi);
    const unsigned pq = gray_decode(gq);
    const double re = (2.0 * pi - (side_ - 1.0)) * scale_;
    const double im = (2.0 * pq - (side_ - 1.0)) * scale_;
    points_[label] = {re, im};
  }
}

unsigned Constellation::slice(cplx s) const {
  const auto axis_position = [&](double x) -> unsigned {
    const double p = (x / scale_ + (side_ - 1.0)) / 2.0;
    long r = std::lround(p);
    if (r < 0) r = 0;
    if (r >= static_cast<long>(side_)) r = side_ - 1;
    return static_cast<unsigned>(r);
  };
  const unsigned gi = gray_encode(axis_position(s.real()));
  const unsigned gq = gray_encode(axis_position(s.imag()));
  return (gi << (bits_per_symbol_ / 2)) | gq;
}

ComplexVector Constellation::modulate(const std::vector<std::uint8_t>& bits) const {
  if (bits.size() % bits_per_symbol_ != 0)
    throw std::invalid_argument("modulate: bit count not a multiple of bits per symbol");
  ComplexVector out(bits.size() / bits_per_symbol_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned label = 0;
    for (unsigned b = 0; b < bits_per_symbol_; ++b)
      label = (label << 1) | (bits[i * bits_per_symbol_ + b] & 1u);
    out[i] = points_[label];
  }
  return out;
}

std::vector<std::uint8_t> Constellation::demodulate_hard(const ComplexVector& symbols) const {
  std::vector<std::uint8_t> bits(symbols.size() * bits_per_symbol_);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const unsigned label = slice(symbols[i]);
    for (unsigned b = 0; b < bits_per_symbol_; ++b)
      bits[i * bits_per_symbol_ + b] =
          static_cast<std::uint8_t>((label >> (bits_per_symbol_ - 1 - b)) & 1u);
  }
  return bits;
}

cplx Constellation::pilot_symbol() const {
  const double v = 1.0 / std::sqrt(2.0);
  return {v, v};
}

double Constellation::min_distance() const { return 2.0 * scale_; }

}  // namespace sbprec
