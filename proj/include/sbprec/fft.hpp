/**
 * @file fft.hpp
 * @brief Unitary DFT matrix and radix-2 FFT/IFFT.
 *
 * Conventions: F[n,m] = exp(-j 2 pi n m / N) / sqrt(N), so F is unitary and
 * fft(v) == F v, ifft(v) == F^H v. Sizes must be powers of two.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbprec/types.hpp"

namespace sbprec {

// Precomputed bit-reversal table and twiddle factors for one transform size.
// Reusable and safe to share across threads once constructed.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);  // throws std::invalid_argument unless n is a power of two

  std::size_t size() const { return n_; }

  void forward(cplx* v) const;  // v <- F v
  void inverse(cplx* v) const;  // v <- F^H v

 private:
  void butterflies(cplx* v, bool conjugate) const;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> bitrev_;
  std::vector<cplx> twiddle_;  // exp(-j 2 pi k / n), k < n/2
  double scale_ = 1.0;         // 1/sqrt(n), applied on every call to keep F unitary
};

ComplexVector fft(const ComplexVector& v);
ComplexVector ifft(const ComplexVector& v);

ComplexMatrix dft_matrix(std::size_t n);

bool is_power_of_two(std::size_t n);

}  // namespace sbprec
