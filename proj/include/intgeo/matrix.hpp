#pragma once

#include <cstddef>
#include <vector>

#include "intgeo/errors.hpp"
#include "intgeo/rational.hpp"
#include "intgeo/scalar.hpp"

namespace intgeo {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ScalarMatrix = Matrix<Scalar>;

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, in row order
  RationalMatrix transform;         // transform * input == reduced (only when tracked)
};

RrefResult rref(const RationalMatrix& m, bool track_transform = false);
std::size_t rank(const RationalMatrix& m);
// Rows of the result form a basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);

// Fraction-free (Bareiss) elimination followed by exact back substitution.
RationalMatrix invert_exact(const RationalMatrix& m);
// Supports matrices whose nonzero entries are single terms c_ij * pi^(r_i + c_j).
ScalarMatrix invert_exact(const ScalarMatrix& m);

ScalarMatrix to_scalar(const RationalMatrix& m);

}  // namespace intgeo
