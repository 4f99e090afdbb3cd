#pragma once

#include <cassert>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "bink/checked.hpp"

namespace bink {

/// Dense integer matrix with checked 64-bit arithmetic.
/// Zero-row and zero-column shapes are legal; they occur constantly as
/// matrices of maps into or out of the zero module.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {
    assert(rows >= 0 && cols >= 0);
  }
  IntMatrix(int rows, int cols, std::initializer_list<bint> entries)
      : rows_(rows), cols_(cols), a_(entries) {
    assert(a_.size() == size_t(rows) * cols);
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<bint>& d) {
    IntMatrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bint& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }
  bint operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (bint v : a_) {
      if (v != 0) return false;
    }
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& b) const {
    assert(cols_ == b.rows_);
    IntMatrix c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        bint aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j)
          c(i, j) = add_ck(c(i, j), mul_ck(aik, b(k, j)));
      }
    return c;
  }

  IntMatrix operator+(const IntMatrix& b) const {
    assert(rows_ == b.rows_ && cols_ == b.cols_);
    IntMatrix c(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = add_ck(a_[i], b.a_[i]);
    return c;
  }

  IntMatrix operator-(const IntMatrix& b) const {
    assert(rows_ == b.rows_ && cols_ == b.cols_);
    IntMatrix c(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = sub_ck(a_[i], b.a_[i]);
    return c;
  }

  IntMatrix operator-() const {
    IntMatrix c(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = neg_ck(a_[i]);
    return c;
  }

  /// y = A x for a column vector x.
  std::vector<bint> apply(const std::vector<bint>& x) const {
    assert(int(x.size()) == cols_);
    std::vector<bint> y(rows_, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        y[i] = add_ck(y[i], mul_ck((*this)(i, j), x[j]));
    return y;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  void scale_row(int i, bint c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = mul_ck((*this)(i, k), c);
  }
  void scale_col(int j, bint c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) = mul_ck((*this)(k, j), c);
  }
  /// row i += c * row j
  void add_row(int i, int j, bint c) {
    for (int k = 0; k < cols_; ++k)
      (*this)(i, k) = add_ck((*this)(i, k), mul_ck(c, (*this)(j, k)));
  }
  /// col i += c * col j
  void add_col(int i, int j, bint c) {
    for (int k = 0; k < rows_; ++k)
      (*this)(k, i) = add_ck((*this)(k, i), mul_ck(c, (*this)(k, j)));
  }

  IntMatrix submatrix(int r0, int c0, int nr, int nc) const {
    IntMatrix s(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }

  std::vector<bint> row(int i) const {
    std::vector<bint> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<bint> col(int j) const {
    std::vector<bint> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  /// Stack b below this matrix (column counts must agree).
  IntMatrix vstack(const IntMatrix& b) const {
    assert(cols_ == b.cols_ || rows_ == 0 || b.rows_ == 0);
    int nc = rows_ > 0 ? cols_ : b.cols_;
    IntMatrix s(rows_ + b.rows_, nc);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) s(rows_ + i, j) = b(i, j);
    return s;
  }

  /// Place b to the right of this matrix (row counts must agree).
  IntMatrix hstack(const IntMatrix& b) const {
    assert(rows_ == b.rows_ || cols_ == 0 || b.cols_ == 0);
    int nr = cols_ > 0 ? rows_ : b.rows_;
    IntMatrix s(nr, cols_ + b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) s(i, cols_ + j) = b(i, j);
    return s;
  }

  const std::vector<bint>& data() const { return a_; }

 private:
  int rows_, cols_;
  std::vector<bint> a_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << "]";
}

}  // namespace bink
