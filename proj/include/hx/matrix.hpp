#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace hx {

// Dense matrix over an exact field.  All ranks, kernels and solves are
// exact; there is no floating point anywhere in the linear algebra.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  F& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k).is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    assert(v.size() == cols_);
    std::vector<F> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix column(size_t j) const {
    Matrix c(rows_, 1);
    for (size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  std::vector<F> column_vec(size_t j) const {
    std::vector<F> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  // Horizontal concatenation [A | B].
  static Matrix hconcat(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ || a.cols_ == 0 || b.cols_ == 0);
    size_t rows = a.cols_ ? a.rows_ : b.rows_;
    Matrix r(rows, a.cols_ + b.cols_);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  // Vertical concatenation [A ; B].
  static Matrix vconcat(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.cols_ || a.rows_ == 0 || b.rows_ == 0);
    size_t cols = a.rows_ ? a.cols_ : b.cols_;
    Matrix r(a.rows_ + b.rows_, cols);
    for (size_t j = 0; j < cols; ++j) {
      for (size_t i = 0; i < a.rows_; ++i) r(i, j) = a(i, j);
      for (size_t i = 0; i < b.rows_; ++i) r(a.rows_ + i, j) = b(i, j);
    }
    return r;
  }

  // Block diagonal [A 0; 0 B].
  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
  }

  // Reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t pr = r;
      while (pr < rows_ && (*this)(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      if (pr != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(pr, j), (*this)(r, j));
      F inv = F(1) / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        F f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  size_t nullity() const { return cols_ - rank(); }

  // Basis of the kernel, one column per free variable, in the canonical
  // order produced by reduced row echelon elimination.
  Matrix kernel_basis() const {
    Matrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    Matrix k(cols_, cols_ - pivots.size());
    size_t kc = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      k(c, kc) = F(1);
      for (size_t pi = 0; pi < pivots.size(); ++pi) k(pivots[pi], kc) = -m(pi, c);
      ++kc;
    }
    return k;
  }

  // Basis of the column space in reduced column echelon form.
  Matrix column_space_basis() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    std::vector<size_t> pivots = t.rref();
    size_t rank = pivots.size();
    Matrix b(rows_, rank);
    for (size_t r = 0; r < rank; ++r)
      for (size_t j = 0; j < rows_; ++j) b(j, r) = t(r, j);
    return b;
  }

  // One solution of A x = b, if any.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    assert(b.size() == rows_);
    Matrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(pi, cols_);
    return x;
  }

 private:
  size_t rows_, cols_;
  std::vector<F> data_;
};

}  // namespace hx
