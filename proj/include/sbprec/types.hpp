/**
 * @file types.hpp
 * @brief Dense complex matrix/vector containers used throughout the library.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sbprec {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Row-major dense complex matrix. Sized at construction; entries default to 0.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  cplx* row(std::size_t r) { return data_.data() + r * cols_; }
  const cplx* row(std::size_t r) const { return data_.data() + r * cols_; }

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

}  // namespace sbprec
