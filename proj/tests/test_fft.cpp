/**
 * @file test_fft.cpp
 * @brief Radix-2 FFT against the O(n^2) DFT oracle; unitarity and edge cases.
 */
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "sbprec/fft.hpp"
#include "sbprec/rng.hpp"

using namespace sbprec;

namespace {
double vec_diff(const ComplexVector& a, const ComplexVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}
}  // namespace

TEST_CASE("dft_matrix small sizes") {
  const ComplexMatrix f1 = dft_matrix(1);
  CHECK(std::abs(f1(0, 0) - cplx{1.0, 0.0}) < 1e-15);

  const ComplexMatrix f2 = dft_matrix(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - cplx{r, 0.0}) < 1e-15);
  CHECK(std::abs(f2(0, 1) - cplx{r, 0.0}) < 1e-15);
  CHECK(std::abs(f2(1, 0) - cplx{r, 0.0}) < 1e-15);
  CHECK(std::abs(f2(1, 1) - cplx{-r, 0.0}) < 1e-15);
}

TEST_CASE("dft_matrix matches the entrywise oracle") {
  for (std::size_t n : {4u, 8u, 64u}) {
    CHECK(oracle::max_abs_diff(dft_matrix(n), oracle::dense_dft(n)) < 1e-13);
  }
}

TEST_CASE("fft of an impulse is flat") {
  ComplexVector v(8, 0.0);
  v[0] = 1.0;
  const ComplexVector out = fft(v);
  const double want = 1.0 / std::sqrt(8.0);
  for (const cplx& x : out) CHECK(std::abs(x - cplx{want, 0.0}) < 1e-14);
}

TEST_CASE("fft of all-ones concentrates on bin zero") {
  ComplexVector v(16, 1.0);
  const ComplexVector out = fft(v);
  CHECK(std::abs(out[0] - cplx{4.0, 0.0}) < 1e-13);
  for (std::size_t i = 1; i < out.size(); ++i) CHECK(std::abs(out[i]) < 1e-13);
}

TEST_CASE("fft matches dense multiply, N = 8 and 64") {
  Rng rng(42);
  for (std::size_t n : {8u, 64u}) {
    const ComplexVector v = oracle::random_vector(rng, n);
    CHECK(vec_diff(fft(v), oracle::mv(oracle::dense_dft(n), v)) < 1e-10);
    CHECK(vec_diff(ifft(v), oracle::mv(oracle::adjoint(oracle::dense_dft(n)), v)) < 1e-10);
  }
}

TEST_CASE("roundtrip and unitarity, N = 128") {
  Rng rng(9);
  const ComplexVector v = oracle::random_vector(rng, 128);
  const ComplexVector f = fft(v);

  double in_e = 0.0, out_e = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    in_e += std::norm(v[i]);
    out_e += std::norm(f[i]);
  }
  CHECK(out_e == doctest::Approx(in_e).epsilon(1e-12));
  CHECK(vec_diff(ifft(f), v) < 1e-12);
  CHECK(vec_diff(fft(ifft(v)), v) < 1e-12);
}

TEST_CASE("plan reuse equals one-shot calls") {
  Rng rng(3);
  const FftPlan plan(32);
  ComplexVector a = oracle::random_vector(rng, 32);
  ComplexVector b = a;
  plan.forward(a.data());
  const ComplexVector c = fft(b);
  CHECK(vec_diff(a, c) == 0.0);
}

TEST_CASE("non-power-of-two sizes are rejected") {
  CHECK_THROWS_AS(FftPlan(0), std::invalid_argument);
  CHECK_THROWS_AS(FftPlan(3), std::invalid_argument);
  CHECK_THROWS_AS(FftPlan(12), std::invalid_argument);
  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_FALSE(is_power_of_two(768));
}
