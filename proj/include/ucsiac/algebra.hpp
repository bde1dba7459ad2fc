#pragma once

// Anti-commutative algebras given by structure constants on a basis e_0..e_{r-1}.
// Only the products <e_i, e_j> with i < j are stored; the tensor is a
// wedge_dim(r) x r matrix whose row pair_index(i, j) is c^(i,j).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ucsiac/limits.hpp"
#include "ucsiac/matrix.hpp"
#include "ucsiac/module.hpp"
#include "ucsiac/subspace.hpp"

namespace ucs {

struct TableEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec c;
};

class ACAlgebra {
 public:
  ACAlgebra() = default;

  /// Validated construction; omitted pairs multiply to zero.
  static ACAlgebra make(const Field& f, std::size_t r, const std::vector<TableEntry>& table) {
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "algebra dimension must be positive");
    ACAlgebra L(f, r);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : table) {
      if (e.i >= r || e.j >= r)
        throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
      if (e.i >= e.j)
        throw Error(ErrorCode::PairNotStrictlyOrdered,
                    "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") needs i < j");
      if (!seen.insert({e.i, e.j}).second)
        throw Error(ErrorCode::DuplicatePair, "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
      if (e.c.size() != r) throw Error(ErrorCode::DimensionMismatch, "structure vector length");
      for (auto x : e.c)
        if (x >= f.order()) throw Error(ErrorCode::IndexOutOfRange, "element code out of range");
      const std::size_t row = pair_index(e.i, e.j, r);
      for (std::size_t k = 0; k < r; ++k) L.tensor_(row, k) = e.c[k];
    }
    return L;
  }

  /// Integer table shorthand: {i, j, {c_0, ..., c_{r-1}}}, reduced into F.
  static ACAlgebra from_ints(const Field& f, std::size_t r,
                             const std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>>& t) {
    std::vector<TableEntry> entries;
    for (const auto& [i, j, c] : t) {
      Vec v;
      for (auto x : c) v.push_back(f.from_int(x));
      entries.push_back({i, j, v});
    }
    return make(f, r, entries);
  }

  /// The algebra <u, v> = (u ^ v) psi for a wedge_dim(r) x r matrix psi.
  static ACAlgebra from_tensor(const Matrix& psi) {
    const std::size_t r = psi.cols();
    if (r == 0 || psi.rows() != wedge_dim(r)) throw Error(ErrorCode::DimensionMismatch, "tensor shape");
    ACAlgebra L(psi.field(), r);
    L.tensor_ = psi;
    return L;
  }

  static ACAlgebra abelian(const Field& f, std::size_t r) { return make(f, r, {}); }

  const Field& field() const { return field_; }
  std::size_t dim() const { return r_; }
  const Matrix& tensor() const { return tensor_; }

  /// c^(i,j) for i < j.
  Vec structure(std::size_t i, std::size_t j) const { return tensor_.row_vec(pair_index(i, j, r_)); }

  /// <e_i, e_j> for any i, j.
  Vec basis_product(std::size_t i, std::size_t j) const {
    if (i >= r_ || j >= r_) throw Error(ErrorCode::IndexOutOfRange, "basis index");
    if (i == j) return Vec(r_, 0);
    if (i < j) return structure(i, j);
    return vec::scale(field_, field_.neg(1), structure(j, i));
  }

  Vec product(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != r_ || y.size() != r_) throw Error(ErrorCode::DimensionMismatch, "product operand length");
    Vec out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (x[i] == 0 && y[i] == 0) continue;
      for (std::size_t j = i + 1; j < r_; ++j) {
        const Scalar w = field_.sub(field_.mul(x[i], y[j]), field_.mul(x[j], y[i]));
        if (w != 0) vec::axpy(field_, w, tensor_.row(pair_index(i, j, r_)), out);
      }
    }
    return out;
  }

  /// Matrix of x -> <x, v>.
  Matrix right_mult(std::span<const Scalar> v) const {
    Matrix R(field_, r_, r_);
    for (std::size_t i = 0; i < r_; ++i) {
      const Vec row = product(vec::unit(r_, i), v);
      for (std::size_t k = 0; k < r_; ++k) R(i, k) = row[k];
    }
    return R;
  }

  Matrix right_mult(std::size_t k) const { return right_mult(vec::unit(r_, k)); }

  std::vector<Matrix> right_mults() const {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < r_; ++k) out.push_back(right_mult(k));
    return out;
  }

  bool is_abelian() const { return tensor_.is_zero(); }

  /// Nonzero stored products in (i, j) order.
  std::vector<TableEntry> entries() const {
    std::vector<TableEntry> out;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i + 1; j < r_; ++j) {
        Vec c = structure(i, j);
        if (!vec::is_zero(c)) out.push_back({i, j, std::move(c)});
      }
    return out;
  }

  friend bool operator==(const ACAlgebra& a, const ACAlgebra& b) {
    return a.r_ == b.r_ && a.field_ == b.field_ && a.tensor_ == b.tensor_;
  }

 private:
  ACAlgebra(Field f, std::size_t r) : field_(f), r_(r), tensor_(f, wedge_dim(r), r) {}

  Field field_;
  std::size_t r_ = 0;
  Matrix tensor_;
};

/// phi (rows = images of basis vectors) respects all basis products L1 -> L2.
inline bool is_homomorphism(const ACAlgebra& L1, const ACAlgebra& L2, const Matrix& phi) {
  const std::size_t r = L1.dim();
  if (phi.rows() != r || phi.cols() != L2.dim()) throw Error(ErrorCode::DimensionMismatch, "map shape");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (phi.apply(L1.structure(i, j)) != L2.product(phi.row(i), phi.row(j))) return false;
  return true;
}

inline bool is_automorphism(const ACAlgebra& L, const Matrix& phi) {
  return phi.determinant() != 0 && is_homomorphism(L, L, phi);
}

/// Structure constants in the basis b_i = row i of P. The map e_i -> b_i is
/// then an isomorphism from the result onto L.
inline ACAlgebra change_basis(const ACAlgebra& L, const Matrix& P) {
  const Matrix Pinv = P.inverse();
  const std::size_t r = L.dim();
  Matrix T(L.field(), wedge_dim(r), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Vec c = Pinv.apply(L.product(P.row(i), P.row(j)));
      for (std::size_t k = 0; k < r; ++k) T(pair_index(i, j, r), k) = c[k];
    }
  return ACAlgebra::from_tensor(T);
}

/// Smallest ideal containing the seeds.
inline Subspace ideal_closure(const ACAlgebra& L, const std::vector<Vec>& seeds) {
  return spin(L.field(), L.dim(), seeds, L.right_mults());
}

struct SubspaceFlags {
  bool is_subalgebra = false;
  bool is_ideal = false;
};

inline SubspaceFlags subspace_tests(const ACAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  SubspaceFlags out{true, true};
  const auto basis = S.basis_vectors();
  for (std::size_t a = 0; a < basis.size() && out.is_subalgebra; ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!S.contains(L.product(basis[a], basis[b]))) {
        out.is_subalgebra = false;
        break;
      }
  for (std::size_t a = 0; a < basis.size() && out.is_ideal; ++a)
    for (std::size_t k = 0; k < L.dim(); ++k)
      if (!S.contains(L.product(basis[a], vec::unit(L.dim(), k)))) {
        out.is_ideal = false;
        break;
      }
  return out;
}

/// {x : <x, e_k> = 0 for all k}.
inline Subspace center(const ACAlgebra& L) {
  const std::size_t r = L.dim();
  Matrix stacked(L.field(), r, r * r);
  for (std::size_t k = 0; k < r; ++k) {
    const Matrix R = L.right_mult(k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(i, k * r + j) = R(i, j);
  }
  return Subspace::span(L.field(), r, left_kernel(stacked));
}

/// <L, L>.
inline Subspace derived_subspace(const ACAlgebra& L) {
  return Subspace::span(L.field(), L.dim(), L.tensor().row_list());
}

/// Non-abelian and without nonzero proper ideals.
inline bool is_simple(const ACAlgebra& L, const Limits& limits = {}) {
  if (L.is_abelian()) return false;
  return irreducibility(L.field(), L.dim(), L.right_mults(), limits).irreducible;
}

/// Counts the one-dimensional algebra as simple as well.
inline bool is_simple_incl_dim1(const ACAlgebra& L, const Limits& limits = {}) {
  return L.dim() == 1 || is_simple(L, limits);
}

struct IdentityReport {
  bool abelian = false;
  bool jacobi = false;
  bool malcev = false;
};

inline Vec jacobiator(const ACAlgebra& L, const Vec& x, const Vec& y, const Vec& z) {
  const Field& f = L.field();
  Vec j = L.product(L.product(x, y), z);
  j = vec::add(f, j, L.product(L.product(y, z), x));
  return vec::add(f, j, L.product(L.product(z, x), y));
}

/// <J(x,y,z), x> = J(x, y, <x,z>).
inline bool malcev_holds(const ACAlgebra& L, const Vec& x, const Vec& y, const Vec& z) {
  return L.product(jacobiator(L, x, y, z), x) == jacobiator(L, x, y, L.product(x, z));
}

inline IdentityReport identity_checks(const ACAlgebra& L) {
  const std::size_t r = L.dim();
  const Field& f = L.field();
  IdentityReport rep;
  rep.abelian = L.is_abelian();
  rep.jacobi = true;
  for (std::size_t a = 0; a < r && rep.jacobi; ++a)
    for (std::size_t b = 0; b < r && rep.jacobi; ++b)
      for (std::size_t c = 0; c < r; ++c)
        if (!vec::is_zero(jacobiator(L, vec::unit(r, a), vec::unit(r, b), vec::unit(r, c)))) {
          rep.jacobi = false;
          break;
        }
  // The identity is quadratic in x, so x = e_a and x = e_a + e_d determine it.
  std::vector<Vec> xs;
  for (std::size_t a = 0; a < r; ++a) {
    xs.push_back(vec::unit(r, a));
    for (std::size_t d = a + 1; d < r; ++d) {
      Vec x = vec::unit(r, a);
      x[d] = 1;
      xs.push_back(x);
      if (f.order() == 3) {
        x[d] = 2;
        xs.push_back(x);
      }
    }
  }
  rep.malcev = true;
  for (std::size_t t = 0; t < xs.size() && rep.malcev; ++t)
    for (std::size_t b = 0; b < r && rep.malcev; ++b)
      for (std::size_t c = 0; c < r; ++c)
        if (!malcev_holds(L, xs[t], vec::unit(r, b), vec::unit(r, c))) {
          rep.malcev = false;
          break;
        }
  return rep;
}

inline ACAlgebra direct_sum(const ACAlgebra& L1, const ACAlgebra& L2) {
  require_same_field(L1.field(), L2.field());
  const std::size_t r1 = L1.dim(), r = L1.dim() + L2.dim();
  std::vector<TableEntry> entries;
  for (const auto& e : L1.entries()) {
    Vec c(r, 0);
    std::copy(e.c.begin(), e.c.end(), c.begin());
    entries.push_back({e.i, e.j, c});
  }
  for (const auto& e : L2.entries()) {
    Vec c(r, 0);
    std::copy(e.c.begin(), e.c.end(), c.begin() + static_cast<std::ptrdiff_t>(r1));
    entries.push_back({e.i + r1, e.j + r1, c});
  }
  return ACAlgebra::make(L1.field(), r, entries);
}

/// The algebra structure carried by a subalgebra, in its RREF basis.
inline ACAlgebra restrict_to(const ACAlgebra& L, const Subspace& S) {
  if (!subspace_tests(L, S).is_subalgebra) throw Error(ErrorCode::InvalidArgument, "subspace is not a subalgebra");
  const auto basis = S.basis_vectors();
  std::vector<TableEntry> entries;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      entries.push_back({i, j, S.coordinates(L.product(basis[i], basis[j]))});
  return ACAlgebra::make(L.field(), basis.size(), entries);
}

/// Closure of span(S) under the product.
inline Subspace generated_subalgebra(const ACAlgebra& L, const std::vector<Vec>& S) {
  EchelonBasis basis(L.field(), L.dim());
  std::vector<Vec> accepted;
  for (const auto& v : S)
    if (basis.insert(v)) accepted.push_back(v);
  for (std::size_t j = 0; j < accepted.size() && !basis.full(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Vec p = L.product(accepted[i], accepted[j]);
      if (basis.insert(p)) accepted.push_back(std::move(p));
    }
  return basis.to_subspace();
}

/// Smallest subset of the standard basis (size <= max_size, lexicographic
/// within each size) generating L.
inline std::optional<std::vector<std::size_t>> generating_pair_search(const ACAlgebra& L, std::size_t max_size = 3) {
  const std::size_t r = L.dim();
  for (std::size_t k = 1; k <= std::min(max_size, r); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Vec> S;
      for (auto i : idx) S.push_back(vec::unit(r, i));
      if (generated_subalgebra(L, S).is_full()) return idx;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == r - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// A generating set of at most three vectors: basis subsets of size <= 2,
/// then pairs of projective points in index order, then basis triples.
inline std::optional<std::vector<Vec>> small_generating_set(const ACAlgebra& L, const Limits& limits = {}) {
  const std::size_t r = L.dim();
  auto from_indices = [r](const std::vector<std::size_t>& idx) {
    std::vector<Vec> S;
    for (auto i : idx) S.push_back(vec::unit(r, i));
    return S;
  };
  if (auto idx = generating_pair_search(L, 2)) return from_indices(*idx);
  const ProjectiveRange points(L.field().order(), r);
  const std::uint64_t n = points.size();
  if (!L.is_abelian() && n <= limits.projective_points) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = a + 1; b < n; ++b) {
        std::vector<Vec> S{points.point(a), points.point(b)};
        if (generated_subalgebra(L, S).is_full()) return S;
      }
  }
  if (auto idx = generating_pair_search(L, 3)) return from_indices(*idx);
  return std::nullopt;
}

struct Decomposition {
  bool abelian = false;
  std::vector<Subspace> ideals;
};

/// Minimal ideals of a centerless algebra, verified to form a direct sum of L
/// with vanishing cross products. Abelian input is reported through the flag,
/// with the coordinate lines as its decomposition.
inline Decomposition semisimple_decompose(const ACAlgebra& L, const Limits& limits = {}) {
  const Field& f = L.field();
  const std::size_t r = L.dim();
  Decomposition out;
  if (L.is_abelian()) {
    out.abelian = true;
    for (std::size_t i = 0; i < r; ++i) out.ideals.push_back(Subspace::span(f, r, {vec::unit(r, i)}));
    return out;
  }
  if (!center(L).is_zero()) throw Error(ErrorCode::HasCenter, "non-abelian algebra with nonzero center");
  const ProjectiveRange points(f.order(), r);
  if (points.size() > limits.projective_points)
    throw Error(ErrorCode::TooLargeForExhaustive, std::to_string(points.size()) + " projective points");

  const auto maps = L.right_mults();
  std::vector<Subspace> closures;
  std::set<std::vector<Scalar>> seen;
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    Subspace c = spin(f, r, {points.point(i)}, maps);
    if (seen.insert(c.basis().data()).second) closures.push_back(std::move(c));
  }
  // Minimal ideals are exactly the inclusion-minimal point closures.
  for (const auto& c : closures) {
    bool minimal = true;
    for (const auto& other : closures)
      if (other.dim() < c.dim() && other.is_subspace_of(c)) {
        minimal = false;
        break;
      }
    if (minimal) out.ideals.push_back(c);
  }

  Subspace total = Subspace::zero(f, r);
  for (const auto& I : out.ideals) total = total + I;
  if (!total.is_full()) throw Error(ErrorCode::NotSemisimple, "minimal ideals do not span the algebra");
  for (std::size_t a = 0; a < out.ideals.size(); ++a)
    for (std::size_t b = a + 1; b < out.ideals.size(); ++b) {
      if (!out.ideals[a].intersect(out.ideals[b]).is_zero())
        throw Error(ErrorCode::NotSemisimple, "minimal ideals intersect");
      for (const auto& u : out.ideals[a].basis_vectors())
        for (const auto& w : out.ideals[b].basis_vectors())
          if (!vec::is_zero(L.product(u, w))) throw Error(ErrorCode::NotSemisimple, "minimal ideals do not annihilate");
    }
  return out;
}

struct Gram3 {
  Matrix A;
  bool invertible = false;
  bool symmetric = false;
};

/// For a 3-dimensional algebra with <L, L> = L: f_0 = <e_1,e_2>,
/// f_1 = <e_2,e_0>, f_2 = <e_0,e_1>, and f_i = sum_j A_ij e_j.
inline Gram3 gram_matrix_3dim(const ACAlgebra& L) {
  if (L.dim() != 3) throw Error(ErrorCode::NotDim3, "algebra has dimension " + std::to_string(L.dim()));
  Gram3 g;
  g.A = Matrix::from_rows(L.field(), 3, {L.basis_product(1, 2), L.basis_product(2, 0), L.basis_product(0, 1)});
  if (g.A.rank() != 3) throw Error(ErrorCode::ProductNotFull, "products of basis pairs are dependent");
  g.invertible = true;
  g.symmetric = g.A == g.A.transpose();
  return g;
}

}  // namespace ucs
