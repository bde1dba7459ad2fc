#pragma once

// Dense matrices over a finite field. Vectors are rows and matrices act on
// the right: v -> v * M. This matches the right-action convention used for
// module generators, automorphisms and intertwiners throughout the library.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucsiac/error.hpp"
#include "ucsiac/field.hpp"

namespace ucs {

namespace vec {

inline bool is_zero(std::span<const Scalar> v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0); }

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline Vec add(const Field& f, std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

inline Vec sub(const Field& f, std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

inline Vec scale(const Field& f, Scalar s, std::span<const Scalar> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

/// y += s * x
inline void axpy(const Field& f, Scalar s, std::span<const Scalar> x, std::span<Scalar> y) {
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(s, x[i]));
}

/// Vector with base-q digits of idx (coordinate 0 least significant).
inline Vec from_index(std::uint64_t idx, std::size_t n, std::uint32_t q) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Scalar>(idx % q);
    idx /= q;
  }
  return v;
}

inline std::uint64_t to_index(std::span<const Scalar> v, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

}  // namespace vec

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Integer entries reduced into the prime subfield.
  static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix diagonal(const Field& f, const Vec& diag) {
    Matrix m(f, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
    return out;
  }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const { return vec::is_zero(data_); }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    const Field& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar s = a(i, k);
        if (s == 0) continue;
        vec::axpy(f, s, b.row(k), c.row(i));
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return c;
  }

  Matrix scaled(Scalar s) const {
    Matrix c(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = field_.mul(s, data_[i]);
    return c;
  }

  /// Row vector times this matrix.
  Vec apply(std::span<const Scalar> v) const {
    if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "vector length vs matrix rows");
    Vec out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) vec::axpy(field_, v[i], row(i), out);
    return out;
  }

  Matrix pow(std::int64_t e) const;
  Matrix inverse() const;
  Scalar determinant() const;
  std::size_t rank() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Result of reducing M (and optionally the system M x = rhs).
struct RrefResult {
  std::size_t rank = 0;
  Matrix rref;                      // reduced row-echelon form of M
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::vector<Vec> kernel;          // basis of {x : M x = 0}, one vector per free column
  std::optional<Matrix> solution;   // particular solution (free variables zero), if rhs given and consistent
  bool consistent = true;
};

namespace detail {

/// In-place Gauss-Jordan elimination restricted to the first `ncols` columns.
inline std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t ncols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const Scalar inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = f.neg(m(i, c));
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact RREF of M, right kernel basis, and a particular solution of M x = rhs.
inline RrefResult rref_solve(const Matrix& M, const Matrix* rhs = nullptr) {
  const Field& f = M.field();
  const std::size_t n = M.cols();
  std::size_t extra = 0;
  if (rhs) {
    require_same_field(f, rhs->field());
    if (rhs->rows() != M.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs row count");
    extra = rhs->cols();
  }
  Matrix aug(f, M.rows(), n + extra);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
    for (std::size_t j = 0; j < extra; ++j) aug(i, n + j) = (*rhs)(i, j);
  }
  RrefResult res;
  res.pivots = detail::gauss_jordan(aug, n);
  res.rank = res.pivots.size();
  res.rref = Matrix(f, M.rows(), n);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) res.rref(i, j) = aug(i, j);

  std::vector<bool> is_pivot(n, false);
  for (auto c : res.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec k(n, 0);
    k[free] = 1;
    for (std::size_t r = 0; r < res.pivots.size(); ++r) k[res.pivots[r]] = f.neg(aug(r, free));
    res.kernel.push_back(std::move(k));
  }

  if (rhs) {
    for (std::size_t i = res.rank; i < M.rows(); ++i)
      for (std::size_t j = 0; j < extra; ++j)
        if (aug(i, n + j) != 0) res.consistent = false;
    if (res.consistent) {
      Matrix x(f, n, extra);
      for (std::size_t r = 0; r < res.pivots.size(); ++r)
        for (std::size_t j = 0; j < extra; ++j) x(res.pivots[r], j) = aug(r, n + j);
      res.solution = std::move(x);
    }
  }
  return res;
}

/// Basis of {v : v M = 0} (row vectors).
inline std::vector<Vec> left_kernel(const Matrix& M) { return rref_solve(M.transpose()).kernel; }

inline std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return detail::gauss_jordan(copy, cols_).size();
}

inline Matrix Matrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  if (detail::gauss_jordan(aug, n).size() != n) throw Error(ErrorCode::NotInvertible, "singular matrix");
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Scalar Matrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  Matrix m = *this;
  const Field& f = field_;
  const std::size_t n = rows_;
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Scalar inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar factor = f.neg(f.mul(m(i, c), inv));
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

inline Matrix Matrix::pow(std::int64_t e) const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "power of non-square matrix");
  Matrix base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Matrix result = identity(field_, rows_);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

/// Index of e_i ^ e_j (i < j) in the lexicographic basis of the exterior square.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d) {
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t wedge_dim(std::size_t d) { return d * (d - 1) / 2; }

/// Induced action on the exterior square in the basis {e_i ^ e_j : i < j}:
/// (e_i ^ e_j) M = sum_{k<l} (M_ik M_jl - M_il M_jk) e_k ^ e_l.
inline Matrix wedge_square(const Matrix& M) {
  if (!M.is_square()) throw Error(ErrorCode::NotSquare, "wedge_square needs a square matrix");
  const Field& f = M.field();
  const std::size_t d = M.rows();
  Matrix W(f, wedge_dim(d), wedge_dim(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const std::size_t row = pair_index(i, j, d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l)
          W(row, pair_index(k, l, d)) = f.sub(f.mul(M(i, k), M(j, l)), f.mul(M(i, l), M(j, k)));
    }
  return W;
}

/// Induced action on the symmetric square, basis {e_i e_j : i <= j} in
/// lexicographic order.
inline Matrix sym_square(const Matrix& M) {
  if (!M.is_square()) throw Error(ErrorCode::NotSquare, "sym_square needs a square matrix");
  const Field& f = M.field();
  const std::size_t d = M.rows();
  const std::size_t D = d * (d + 1) / 2;
  // Rows before i contribute d + (d-1) + ... + (d-i+1).
  auto sym_index = [d](std::size_t i, std::size_t j) {
    std::size_t before = 0;
    for (std::size_t t = 0; t < i; ++t) before += d - t;
    return before + (j - i);
  };
  Matrix S(f, D, D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const std::size_t row = sym_index(i, j);
      // (e_i e_j) M = (sum_k M_ik e_k)(sum_l M_jl e_l)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Scalar c = f.mul(M(i, k), M(j, l));
          if (c == 0) continue;
          const std::size_t col = k <= l ? sym_index(k, l) : sym_index(l, k);
          S(row, col) = f.add(S(row, col), c);
        }
    }
  return S;
}

/// Kronecker product; the row index of e_a (x) e_b is a * B.rows() + b.
inline Matrix kronecker(const Matrix& A, const Matrix& B) {
  require_same_field(A.field(), B.field());
  const Field& f = A.field();
  Matrix K(f, A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Scalar a = A(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l)
          K(i * B.rows() + k, j * B.cols() + l) = f.mul(a, B(k, l));
    }
  return K;
}

/// Characteristic polynomial det(xI - M), coefficients low-first (monic).
/// Hessenberg reduction followed by the standard recurrence; valid over any field.
inline Vec charpoly(const Matrix& M) {
  if (!M.is_square()) throw Error(ErrorCode::NotSquare, "charpoly of non-square matrix");
  const Field& f = M.field();
  const std::size_t n = M.rows();
  Matrix H = M;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && H(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, m));
    }
    const Scalar inv = f.inv(H(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      const Scalar u = f.mul(H(j, m - 1), inv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) H(j, k) = f.sub(H(j, k), f.mul(u, H(m, k)));
      for (std::size_t k = 0; k < n; ++k) H(k, m) = f.add(H(k, m), f.mul(u, H(k, j)));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t k = 0; k < n; ++k) {
    // p[k+1] = (x - H_kk) p[k] - sum_{i<k} H_ik (prod_{j=i+1..k} H_{j,j-1}) p[i]
    Vec next(k + 2, 0);
    for (std::size_t t = 0; t <= k; ++t) {
      next[t + 1] = f.add(next[t + 1], p[k][t]);
      next[t] = f.sub(next[t], f.mul(H(k, k), p[k][t]));
    }
    Scalar prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = f.mul(prod, H(i + 1, i));
      const Scalar coef = f.mul(H(i, k), prod);
      if (coef == 0) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) next[t] = f.sub(next[t], f.mul(coef, p[i][t]));
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

}  // namespace ucs
