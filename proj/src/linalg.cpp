/**
 * @file linalg.cpp
 * @brief Dense complex linear algebra kernels.
 */
#include "sbprec/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "sbprec/errors.hpp"

namespace sbprec {

namespace {

constexpr double kSingularPivotFactor = 1e-13;

// In-place lower Cholesky factor of a Hermitian matrix. Declares the system
// singular when a pivot drops below kSingularPivotFactor x max diagonal.
void cholesky_in_place(ComplexMatrix& g) {
  const std::size_t n = g.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, g(i, i).real());
  const double pivot_floor = kSingularPivotFactor * max_diag;

  for (std::size_t j = 0; j < n; ++j) {
    double pivot = g(j, j).real();
    for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(g(j, k));
    if (!(pivot > pivot_floor) || max_diag <= 0.0) {
      throw SingularSystemError("cholesky: matrix numerically singular (pivot " +
                                std::to_string(pivot) + ")");
    }
    const double ljj = std::sqrt(pivot);
    g(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= g(i, k) * std::conj(g(j, k));
      g(i, j) = s / ljj;
    }
  }
}

}  // namespace

ComplexMatrix herm(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const cplx* brow = b.row(k);
      cplx* rrow = r.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) rrow[j] += aik * brow[j];
    }
  }
  return r;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  ComplexVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    const cplx* arow = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += arow[j] * v[j];
    r[i] = s;
  }
  return r;
}

ComplexMatrix take_columns(const ComplexMatrix& a, const std::vector<std::size_t>& idx) {
  ComplexMatrix r(a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = a(i, idx[j]);
  return r;
}

double fro_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  const cplx* p = a.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) s += std::norm(p[i]);
  return s;
}

double fro_norm(const ComplexMatrix& a) { return std::sqrt(fro_norm_sq(a)); }

double vec_norm(const ComplexVector& v) {
  double s = 0.0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

bool all_finite(const ComplexMatrix& a) {
  const cplx* p = a.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
    if (!std::isfinite(p[i].real()) || !std::isfinite(p[i].imag())) return false;
  return true;
}

ComplexMatrix solve_hpd(const ComplexMatrix& g, const ComplexMatrix& b) {
  if (g.rows() != g.cols() || g.rows() != b.rows())
    throw std::invalid_argument("solve_hpd: dimension mismatch");
  ComplexMatrix l = g;
  cholesky_in_place(l);
  const std::size_t n = g.rows(), c = b.cols();
  ComplexMatrix x = b;
  // L y = b (forward), then L^H x = y (backward), per column.
  for (std::size_t col = 0; col < c; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = x(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, col);
      x(i, col) = s / l(i, i).real();
    }
    for (std::size_t ii = n; ii-- > 0;) {
      cplx s = x(ii, col);
      for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l(k, ii)) * x(k, col);
      x(ii, col) = s / l(ii, ii).real();
    }
  }
  return x;
}

ComplexMatrix ridge_ls(const ComplexMatrix& a, const ComplexMatrix& b_cols, double kappa) {
  if (a.rows() != b_cols.rows()) throw std::invalid_argument("ridge_ls: dimension mismatch");
  if (kappa < 0.0) throw std::invalid_argument("ridge_ls: kappa must be nonnegative");
  const std::size_t m = a.rows(), k = a.cols();

  // Gram matrix A^H A + kappa I (Hermitian, only needs one triangle but the
  // sizes here are tiny).
  ComplexMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < m; ++r) s += std::conj(a(r, i)) * a(r, j);
      g(i, j) = s;
    }
    g(i, i) += kappa;
  }
  ComplexMatrix rhs = matmul(herm(a), b_cols);
  return solve_hpd(g, rhs);
}

}  // namespace sbprec
