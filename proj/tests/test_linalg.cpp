/**
 * @file test_linalg.cpp
 * @brief Dense complex algebra and the ridge solver against independent oracles.
 */
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sbprec/errors.hpp"
#include "sbprec/linalg.hpp"
#include "sbprec/rng.hpp"

using namespace sbprec;

TEST_CASE("herm conjugate-transposes") {
  ComplexMatrix a(1, 2);
  a(0, 0) = {0.0, 0.0};
  a(0, 1) = {0.0, 1.0};
  const ComplexMatrix t = herm(a);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 1);
  CHECK(t(0, 0) == cplx{0.0, 0.0});
  CHECK(t(1, 0) == cplx{0.0, -1.0});
}

TEST_CASE("matmul and matvec match naive loops") {
  Rng rng(101);
  const ComplexMatrix a = oracle::random_matrix(rng, 5, 7);
  const ComplexMatrix b = oracle::random_matrix(rng, 7, 3);
  const ComplexVector v = oracle::random_vector(rng, 7);

  CHECK(oracle::max_abs_diff(matmul(a, b), oracle::mm(a, b)) < 1e-12);
  const ComplexVector got = matvec(a, v);
  const ComplexVector want = oracle::mv(a, v);
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("take_columns picks the requested columns in order") {
  Rng rng(5);
  const ComplexMatrix a = oracle::random_matrix(rng, 3, 6);
  const ComplexMatrix sub = take_columns(a, {4, 0, 5});
  CHECK(sub.cols() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(sub(r, 0) == a(r, 4));
    CHECK(sub(r, 1) == a(r, 0));
    CHECK(sub(r, 2) == a(r, 5));
  }
}

TEST_CASE("norms") {
  ComplexMatrix a(2, 2);
  a(0, 0) = {3.0, 0.0};
  a(1, 1) = {0.0, 4.0};
  CHECK(fro_norm(a) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(fro_norm_sq(a) == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(vec_norm({cplx{1.0, 0.0}, cplx{0.0, 2.0}, cplx{2.0, 0.0}}) ==
        doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("all_finite flags NaN and infinity") {
  ComplexMatrix a(2, 2);
  CHECK(all_finite(a));
  a(1, 0) = {std::nan(""), 0.0};
  CHECK_FALSE(all_finite(a));
  a(1, 0) = {0.0, INFINITY};
  CHECK_FALSE(all_finite(a));
}

TEST_CASE("solve_hpd matches Gauss-Jordan on random HPD systems") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = oracle::random_matrix(rng, 6, 6);
    ComplexMatrix g = matmul(herm(a), a);  // Hermitian positive definite
    for (std::size_t i = 0; i < 6; ++i) g(i, i) += 0.5;
    const ComplexMatrix b = oracle::random_matrix(rng, 6, 2);
    CHECK(oracle::max_abs_diff(solve_hpd(g, b), oracle::gauss_jordan_solve(g, b)) < 1e-10);
  }
}

TEST_CASE("ridge_ls identity case") {
  const ComplexMatrix a = ComplexMatrix::identity(3);
  ComplexMatrix b(3, 1);
  b(0, 0) = {1.0, 2.0};
  b(1, 0) = {-3.0, 0.5};
  b(2, 0) = {0.0, -1.0};
  const ComplexMatrix x = ridge_ls(a, b, 0.0);
  CHECK(oracle::max_abs_diff(x, b) < 1e-14);
}

TEST_CASE("ridge_ls scalar case: A=[2], b=[1], kappa=1 -> 0.4") {
  ComplexMatrix a(1, 1), b(1, 1);
  a(0, 0) = 2.0;
  b(0, 0) = 1.0;
  const ComplexMatrix x = ridge_ls(a, b, 1.0);
  CHECK(std::abs(x(0, 0) - cplx{0.4, 0.0}) < 1e-14);
}

TEST_CASE("ridge_ls matches a gradient-descent minimizer and Gauss-Jordan") {
  Rng rng(23);
  const ComplexMatrix a = oracle::random_matrix(rng, 8, 4);
  const ComplexMatrix b = oracle::random_matrix(rng, 8, 2);
  const double kappa = 0.3;
  const ComplexMatrix x = ridge_ls(a, b, kappa);
  CHECK(oracle::max_abs_diff(x, oracle::ridge_via_gj(a, b, kappa)) < 1e-10);
  CHECK(oracle::max_abs_diff(x, oracle::ridge_via_gradient_descent(a, b, kappa, 20000)) < 1e-6);
}

TEST_CASE("ridge_ls with kappa=0 on a singular system throws") {
  ComplexMatrix a(2, 2);  // rank 1
  a(0, 0) = 1.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 1.0;
  ComplexMatrix b(2, 1);
  b(0, 0) = 1.0;
  CHECK_THROWS_AS(ridge_ls(a, b, 0.0), SingularSystemError);

  const ComplexMatrix zero(3, 3);
  CHECK_THROWS_AS(ridge_ls(zero, ComplexMatrix(3, 1), 0.0), SingularSystemError);
}

TEST_CASE("ridge_ls with kappa>0 regularizes a singular system") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 1.0;
  ComplexMatrix b(2, 1);
  b(0, 0) = 1.0;
  b(1, 0) = 1.0;
  const ComplexMatrix x = ridge_ls(a, b, 0.1);
  CHECK(oracle::max_abs_diff(x, oracle::ridge_via_gj(a, b, 0.1)) < 1e-12);
}
