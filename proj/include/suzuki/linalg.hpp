#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "suzuki/scalars.hpp"

namespace suzuki {

inline bool is_zero(const CycScalar& a) { return a.is_zero(); }

// Dense row-major matrix over an exact field type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix z(x.r_, y.c_, T());
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (int j = 0; j < y.c_; ++j)
          if (!is_zero(y(k, j))) z(i, j) += xik * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero_matrix() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using CycMatrix = Matrix<CycScalar>;

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(std::vector<std::vector<T>>& rows, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!is_zero(rows[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    T inv = rows[r][c].inverse();
    for (int k = c; k < ncols; ++k)
      if (!is_zero(rows[r][k])) rows[r][k] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      T f = rows[i][c];
      for (int k = c; k < ncols; ++k)
        if (!is_zero(rows[r][k])) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class T>
int rank_of(std::vector<std::vector<T>> rows, int ncols) {
  return static_cast<int>(rref(rows, ncols).size());
}

// Basis of {x : M x = 0} for M given by rows with ncols columns.
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> rows, int ncols, const T& one, const T& zero) {
  auto piv = rref(rows, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(ncols, zero);
    v[f] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Coordinates of y in the span of the given vectors (columns), if it lies there.
template <class T>
class SpanSolver {
 public:
  SpanSolver(const std::vector<std::vector<T>>& vecs, int dim, const T& one, const T& zero)
      : k_(static_cast<int>(vecs.size())), dim_(dim), zero_(zero) {
    // rows = coordinates of the ambient space, augmented with identity to track combinations
    rows_.assign(k_, std::vector<T>(dim + k_, zero));
    for (int i = 0; i < k_; ++i) {
      for (int d = 0; d < dim; ++d) rows_[i][d] = vecs[i][d];
      rows_[i][dim + i] = one;
    }
    int r = 0;
    for (int c = 0; c < dim && r < k_; ++c) {
      int piv = -1;
      for (int i = r; i < k_; ++i)
        if (!is_zero(rows_[i][c])) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows_[piv], rows_[r]);
      T inv = rows_[r][c].inverse();
      for (auto& x : rows_[r])
        if (!is_zero(x)) x *= inv;
      for (int i = 0; i < k_; ++i) {
        if (i == r || is_zero(rows_[i][c])) continue;
        T f = rows_[i][c];
        for (int kk = 0; kk < dim + k_; ++kk)
          if (!is_zero(rows_[r][kk])) rows_[i][kk] -= f * rows_[r][kk];
      }
      piv_.push_back(c);
      ++r;
    }
    rank_ = r;
  }

  int rank() const { return rank_; }

  std::optional<std::vector<T>> solve(const std::vector<T>& y) const {
    std::vector<T> rem = y;
    std::vector<T> coef(k_, zero_);
    for (int r = 0; r < rank_; ++r) {
      T f = rem[piv_[r]];
      if (is_zero(f)) continue;
      for (int d = 0; d < dim_; ++d)
        if (!is_zero(rows_[r][d])) rem[d] -= f * rows_[r][d];
      for (int i = 0; i < k_; ++i)
        if (!is_zero(rows_[r][dim_ + i])) coef[i] += f * rows_[r][dim_ + i];
    }
    for (const auto& x : rem)
      if (!is_zero(x)) return std::nullopt;
    return coef;
  }

 private:
  int k_, dim_, rank_ = 0;
  T zero_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> piv_;
};

}  // namespace suzuki
