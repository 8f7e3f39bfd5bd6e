#pragma once

// Dense matrices over GF(p) with the exact kernels the workbench needs:
// row reduction, rank, nullspace, solving, inverses. Row-major storage,
// column vectors; a matrix of shape (r x c) maps K^c -> K^r.

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "tautilt/gfp.hpp"

namespace tautilt {

struct Mat {
  uint32_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static Mat identity(uint32_t p, int n) {
    Mat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool is_zero() const {
    for (uint32_t x : a)
      if (x) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }

  Mat operator*(const Mat& o) const {
    assert(cols == o.rows && p == o.p);
    Mat r(p, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        uint64_t v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < o.cols; ++j) {
          uint64_t cur = r.at(i, j) + v * o.at(k, j) % p;
          r.at(i, j) = static_cast<uint32_t>(cur >= p ? cur - p : cur);
        }
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    assert(rows == o.rows && cols == o.cols);
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = add_mod(a[i], o.a[i], p);
    return r;
  }

  Mat operator-(const Mat& o) const {
    assert(rows == o.rows && cols == o.cols);
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = sub_mod(a[i], o.a[i], p);
    return r;
  }

  Mat scaled(uint32_t c) const {
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = mul_mod(a[i], c, p);
    return r;
  }

  Mat transposed() const {
    Mat r(p, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  static Mat hstack(const Mat& l, const Mat& r) {
    assert(l.rows == r.rows && l.p == r.p);
    Mat m(l.p, l.rows, l.cols + r.cols);
    for (int i = 0; i < l.rows; ++i) {
      for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
      for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
    }
    return m;
  }

  static Mat vstack(const Mat& t, const Mat& b) {
    assert(t.cols == b.cols && t.p == b.p);
    Mat m(t.p, t.rows + b.rows, t.cols);
    for (int i = 0; i < t.rows; ++i)
      for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
    return m;
  }

  static Mat direct_sum(const Mat& x, const Mat& y) {
    Mat m(x.p, x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
      for (int j = 0; j < y.cols; ++j) m.at(x.rows + i, x.cols + j) = y.at(i, j);
    return m;
  }

  Mat columns(const std::vector<int>& idx) const {
    Mat m(p, rows, static_cast<int>(idx.size()));
    for (int i = 0; i < rows; ++i)
      for (size_t j = 0; j < idx.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return m;
  }
};

// In-place reduced row echelon form; returns pivot column indices in order.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    uint32_t inv = inv_mod(m.at(row, col), m.p);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = mul_mod(m.at(row, j), inv, m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      uint32_t f = m.at(i, col);
      if (!f) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(row, j), m.p), m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

// Basis of {x : A x = 0}, returned as the columns of a (cols x nullity) matrix.
inline Mat nullspace(const Mat& A) {
  Mat m = A;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat ns(A.p, A.cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ns.at(fc, static_cast<int>(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      ns.at(pivots[r], static_cast<int>(k)) = neg_mod(m.at(static_cast<int>(r), fc), A.p);
  }
  return ns;
}

// Solve A X = B exactly (every column of B must lie in the column space of A).
// Returns one solution, or nullopt if some column is not solvable.
inline std::optional<Mat> solve(const Mat& A, const Mat& B) {
  assert(A.rows == B.rows);
  Mat aug = Mat::hstack(A, B);
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c >= A.cols) return std::nullopt;  // pivot in the B block: inconsistent
  Mat X(A.p, A.cols, B.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < B.cols; ++j)
      X.at(pivots[r], j) = aug.at(static_cast<int>(r), A.cols + j);
  return X;
}

// Inverse of a square matrix; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& A) {
  assert(A.rows == A.cols);
  Mat aug = Mat::hstack(A, Mat::identity(A.p, A.rows));
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != A.rows) return std::nullopt;
  Mat inv(A.p, A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) inv.at(i, j) = aug.at(i, A.cols + j);
  return inv;
}

// A basis of the column space: the pivot columns of A, in column order.
inline Mat column_space(const Mat& A) {
  Mat m = A;
  std::vector<int> piv_rows = rref(m);
  return A.columns(piv_rows);
}

inline Mat mat_pow(const Mat& A, uint64_t e) {
  assert(A.rows == A.cols);
  Mat r = Mat::identity(A.p, A.rows);
  Mat base = A;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace tautilt
