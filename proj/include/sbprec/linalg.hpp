/**
 * @file linalg.hpp
 * @brief Dense complex linear algebra: products, norms, ridge least squares.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "sbprec/types.hpp"

namespace sbprec {

ComplexMatrix herm(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v);

ComplexMatrix take_columns(const ComplexMatrix& a, const std::vector<std::size_t>& idx);

double fro_norm(const ComplexMatrix& a);
double fro_norm_sq(const ComplexMatrix& a);
double vec_norm(const ComplexVector& v);
bool all_finite(const ComplexMatrix& a);

// Regularized least squares: returns the k x c matrix X minimizing
// ||A X - B||_F^2 + kappa ||X||_F^2, computed by Cholesky on the
// normal equations (A^H A + kappa I) X = A^H B.
//
// Throws SingularSystemError when kappa = 0 and the system is numerically
// singular (a Cholesky pivot falls below 1e-13 x the largest diagonal).
ComplexMatrix ridge_ls(const ComplexMatrix& a, const ComplexMatrix& b_cols, double kappa);

// Solves G X = B for Hermitian positive definite G. Shared by ridge_ls and
// the U x U Wiener-filter form.
ComplexMatrix solve_hpd(const ComplexMatrix& g, const ComplexMatrix& b);

}  // namespace sbprec
