/**
 * @file fft.cpp
 * @brief Radix-2 decimation-in-time FFT with precomputed twiddle factors.
 */
#include "sbprec/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace sbprec {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("FftPlan: size " + std::to_string(n) +
                                " is not a power of two");
  unsigned log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;

  bitrev_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = 0;
    for (unsigned b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
    bitrev_[i] = r;
  }

  twiddle_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddle_[k] = {std::cos(ang), std::sin(ang)};
  }
  scale_ = 1.0 / std::sqrt(static_cast<double>(n));
}

void FftPlan::butterflies(cplx* v, bool conjugate) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx w = twiddle_[k * stride];
        if (conjugate) w = std::conj(w);
        const cplx t = w * v[start + k + len / 2];
        const cplx u = v[start + k];
        v[start + k] = u + t;
        v[start + k + len / 2] = u - t;
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) v[i] *= scale_;
}

void FftPlan::forward(cplx* v) const { butterflies(v, /*conjugate=*/false); }
void FftPlan::inverse(cplx* v) const { butterflies(v, /*conjugate=*/true); }

ComplexVector fft(const ComplexVector& v) {
  FftPlan plan(v.size());
  ComplexVector out = v;
  plan.forward(out.data());
  return out;
}

ComplexVector ifft(const ComplexVector& v) {
  FftPlan plan(v.size());
  ComplexVector out = v;
  plan.inverse(out.data());
  return out;
}

ComplexMatrix dft_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: n must be >= 1");
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // n*m taken mod N keeps the angle small for large sizes.
      const std::size_t km = (r * c) % n;
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(km) / static_cast<double>(n);
      f(r, c) = cplx{std::cos(ang), std::sin(ang)} * scale;
    }
  }
  return f;
}

}  // namespace sbprec
