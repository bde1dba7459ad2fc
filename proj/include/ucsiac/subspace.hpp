#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ucsiac/limits.hpp"
#include "ucsiac/matrix.hpp"

namespace ucs {

class Subspace;

/// Incrementally built semi-echelon basis. Rows are kept sorted by pivot with
/// the pivot entry equal to 1, which is enough for exact reduction.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }

  void reduce_in_place(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c != 0) vec::axpy(field_, field_.neg(c), rows_[r], v);
    }
  }

  Vec reduce(Vec v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(const Vec& v) const { return vec::is_zero(reduce(v)); }

  /// Adds v if it is independent of the current rows. Returns true when added.
  bool insert(Vec v) {
    if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
    reduce_in_place(v);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return false;
    const Scalar inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(inv, x);
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  Subspace to_subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of F^n stored by its canonical RREF basis; equality of
/// subspaces is equality of these matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
    Matrix m = Matrix::from_rows(f, ambient, vectors);
    const auto pivots = detail::gauss_jordan(m, ambient);
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.pivots_ = pivots;
    s.basis_ = Matrix(f, pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = m(i, j);
    return s;
  }

  static Subspace zero(const Field& f, std::size_t ambient) { return span(f, ambient, {}); }

  static Subspace full(const Field& f, std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(vec::unit(ambient, i));
    return span(f, ambient, rows);
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec reduce(Vec v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c != 0) vec::axpy(field_, field_.neg(c), basis_.row(r), v);
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec::is_zero(reduce(v)); }

  /// Coordinates of v in the RREF basis (the entries at the pivot columns).
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw Error(ErrorCode::DimensionMismatch, "vector not in subspace");
    Vec c(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  bool is_subspace_of(const Subspace& other) const {
    for (std::size_t r = 0; r < dim(); ++r)
      if (!other.contains(basis_.row_vec(r))) return false;
    return true;
  }

  bool is_invariant(const Matrix& g) const {
    for (std::size_t r = 0; r < dim(); ++r)
      if (!contains(g.apply(basis_.row(r)))) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    auto rows = basis_vectors();
    for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
    return span(field_, ambient_, rows);
  }

  Subspace intersect(const Subspace& other) const {
    if (is_zero() || other.is_zero()) return zero(field_, ambient_);
    auto rows = basis_vectors();
    for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
    const Matrix stacked = Matrix::from_rows(field_, ambient_, rows);
    std::vector<Vec> meet;
    for (const auto& k : left_kernel(stacked)) {
      Vec v(ambient_, 0);
      for (std::size_t r = 0; r < dim(); ++r) vec::axpy(field_, k[r], basis_.row(r), v);
      meet.push_back(std::move(v));
    }
    return span(field_, ambient_, meet);
  }

  /// Image of the subspace under v -> v M.
  Subspace image(const Matrix& M) const {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dim(); ++r) rows.push_back(M.apply(basis_.row(r)));
    return span(field_, M.cols(), rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace EchelonBasis::to_subspace() const { return Subspace::span(field_, ambient_, rows_); }

/// Calls fn(subspace) for every subspace of F^n of dimension in [min_dim,
/// max_dim], enumerating RREF matrices by pivot set and free entries.
template <typename Fn>
void for_each_subspace(const Field& f, std::size_t n, std::size_t min_dim, std::size_t max_dim, Fn&& fn) {
  const std::uint32_t q = f.order();
  for (std::size_t k = min_dim; k <= std::min(max_dim, n); ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // Free positions: row i, columns > piv[i] that are not pivots.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c)
          if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(i, c);
      const std::uint64_t count = checked_pow(q, free.size());
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Vec> rows(k, Vec(n, 0));
        for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
        std::uint64_t t = idx;
        for (const auto& [i, c] : free) {
          rows[i][c] = static_cast<Scalar>(t % q);
          t /= q;
        }
        fn(Subspace::span(f, n, rows));
      }
      // Next k-combination of pivot columns.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

}  // namespace ucs
