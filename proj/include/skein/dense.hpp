#pragma once

// Small dense matrices over exact scalars: Rational, RationalFunction, or
// MultiLaurent (ring entries, determinant only).

#include <optional>
#include <utility>
#include <vector>

#include "skein/poly.hpp"

namespace skein {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const S& zero, const S& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swapRows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw ContractViolation("matrix shape mismatch");
    S zero = x.a_.empty() ? S() : x.a_[0] - x.a_[0];
    Matrix out(x.rows_, y.cols_, zero);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (isZero(x(i, k))) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

/// Determinant by Gaussian elimination; S must be a field.
template <class S>
S determinant(Matrix<S> m, const S& one) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  S det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && isZero(m(p, c))) ++p;
    if (p == n) return one - one;
    if (p != c) {
      m.swapRows(p, c);
      det = -det;
    }
    det *= m(c, c);
    S inv = one / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (isZero(m(r, c))) continue;
      S f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant over the Laurent ring; every division
/// is exact.
inline MultiLaurent determinant(Matrix<MultiLaurent> m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiLaurent(Vars{}, 1);
  Vars vars = m(0, 0).vars();
  MultiLaurent prev(vars, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).isZero()) ++p;
    if (p == n) return MultiLaurent(vars);
    if (p != k) {
      m.swapRows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiLaurent t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = exactDivide(t, prev);
        if (!q) throw ArithmeticError("internal: inexact Bareiss step");
        m(i, j) = std::move(*q);
      }
      m(i, k) = MultiLaurent(vars);
    }
    prev = m(k, k);
  }
  MultiLaurent d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

/// Two-sided inverse over a field, or nullopt when singular.
template <class S>
std::optional<Matrix<S>> inverse(Matrix<S> m, const S& one) {
  if (m.rows() != m.cols()) throw ContractViolation("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const S zero = one - one;
  Matrix<S> inv = Matrix<S>::identity(n, zero, one);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && isZero(m(p, c))) ++p;
    if (p == n) return std::nullopt;
    m.swapRows(p, c);
    inv.swapRows(p, c);
    S s = one / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || isZero(m(r, c))) continue;
      S f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Basis of the right kernel {x : m x = 0} over a field, from the reduced
/// row echelon form. Free variables are set to 1 one at a time.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m, const S& one) {
  const S zero = one - one;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivotCol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t p = row;
    while (p < R && isZero(m(p, c))) ++p;
    if (p == R) continue;
    m.swapRows(p, row);
    S s = one / m(row, c);
    for (std::size_t j = c; j < C; ++j) m(row, j) *= s;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || isZero(m(r, c))) continue;
      S f = m(r, c);
      for (std::size_t j = c; j < C; ++j) m(r, j) -= f * m(row, j);
    }
    pivotCol.push_back(c);
    ++row;
  }
  std::vector<bool> isPivot(C, false);
  for (auto c : pivotCol) isPivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (isPivot[f]) continue;
    std::vector<S> v(C, zero);
    v[f] = one;
    for (std::size_t r = 0; r < pivotCol.size(); ++r) v[pivotCol[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace skein
