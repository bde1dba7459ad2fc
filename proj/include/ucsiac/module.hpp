#pragma once

// Matrix modules: spinning, irreducibility, intertwiners.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucsiac/limits.hpp"
#include "ucsiac/matrix.hpp"
#include "ucsiac/subspace.hpp"

namespace ucs {

/// A group acting on F^d through invertible generator matrices (right action).
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(Field field, std::size_t dim, std::vector<Matrix> gens, std::vector<std::string> labels = {})
      : field_(std::move(field)), dim_(dim), gens_(std::move(gens)), labels_(std::move(labels)) {
    for (const auto& g : gens_) {
      require_same_field(field_, g.field());
      if (g.rows() != dim_ || g.cols() != dim_) throw Error(ErrorCode::DimensionMismatch, "generator shape");
      if (g.determinant() == 0) throw Error(ErrorCode::NotInvertible, "module generator is singular");
    }
    if (!labels_.empty() && labels_.size() != gens_.size())
      throw Error(ErrorCode::DimensionMismatch, "label count vs generator count");
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& gens() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return gens_.size(); }

  /// Induced action on the exterior square, generator by generator.
  ModuleRep wedge() const {
    std::vector<Matrix> w;
    for (const auto& g : gens_) w.push_back(wedge_square(g));
    return ModuleRep(field_, wedge_dim(dim_), std::move(w), labels_);
  }

  ModuleRep sym() const {
    std::vector<Matrix> s;
    for (const auto& g : gens_) s.push_back(sym_square(g));
    return ModuleRep(field_, dim_ * (dim_ + 1) / 2, std::move(s), labels_);
  }

  /// Tensor product with generators aligned by index.
  ModuleRep tensor(const ModuleRep& other) const {
    if (other.size() != size()) throw Error(ErrorCode::GeneratorCountMismatch, "tensor of unaligned modules");
    std::vector<Matrix> t;
    for (std::size_t i = 0; i < size(); ++i) t.push_back(kronecker(gens_[i], other.gens_[i]));
    return ModuleRep(field_, dim_ * other.dim_, std::move(t), labels_);
  }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::vector<std::string> labels_;
};

/// Smallest subspace containing the seeds and mapped into itself by every map.
/// The maps need not be invertible (ideal closure reuses this).
inline Subspace spin(const Field& f, std::size_t d, const std::vector<Vec>& seeds, const std::vector<Matrix>& maps) {
  for (const auto& m : maps)
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "map shape in spin");
  EchelonBasis basis(f, d);
  std::vector<Vec> queue;
  for (const auto& s : seeds) {
    if (s.size() != d) throw Error(ErrorCode::DimensionMismatch, "seed length in spin");
    if (basis.insert(s)) queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size() && !basis.full(); ++head) {
    for (const auto& m : maps) {
      Vec img = m.apply(queue[head]);
      if (basis.insert(img)) queue.push_back(std::move(img));
      if (basis.full()) break;
    }
  }
  return basis.to_subspace();
}

inline Subspace spin(const std::vector<Vec>& seeds, const ModuleRep& rep) {
  return spin(rep.field(), rep.dim(), seeds, rep.gens());
}

namespace detail {

/// Dimension of the spin only; stops as soon as the whole space is reached.
inline std::size_t spin_dim(const Field& f, std::size_t d, const Vec& seed, const std::vector<Matrix>& maps) {
  EchelonBasis basis(f, d);
  std::vector<Vec> queue;
  if (basis.insert(seed)) queue.push_back(seed);
  for (std::size_t head = 0; head < queue.size() && !basis.full(); ++head)
    for (const auto& m : maps) {
      Vec img = m.apply(queue[head]);
      if (basis.insert(img)) queue.push_back(std::move(img));
      if (basis.full()) break;
    }
  return basis.dim();
}

}  // namespace detail

/// The points of the projective space P(F^d), one normalized representative
/// each (first nonzero coordinate equal to 1), addressable by index.
class ProjectiveRange {
 public:
  ProjectiveRange(std::uint32_t q, std::size_t d) : q_(q), d_(d) {
    std::uint64_t block = 1;
    blocks_.assign(d, 0);
    for (std::size_t t = d; t-- > 0;) {
      blocks_[t] = block;
      block = block > UINT64_MAX / q ? UINT64_MAX : block * q;
    }
    size_ = 0;
    for (auto b : blocks_) size_ = (size_ > UINT64_MAX - b) ? UINT64_MAX : size_ + b;
  }

  std::uint64_t size() const { return size_; }

  /// Points with leading coordinate at position t come in a block of q^(d-1-t).
  Vec point(std::uint64_t idx) const {
    Vec v(d_, 0);
    std::size_t t = 0;
    while (idx >= blocks_[t]) idx -= blocks_[t++];
    v[t] = 1;
    for (std::size_t i = t + 1; i < d_; ++i) {
      v[i] = static_cast<Scalar>(idx % q_);
      idx /= q_;
    }
    return v;
  }

 private:
  std::uint32_t q_;
  std::size_t d_;
  std::vector<std::uint64_t> blocks_;
  std::uint64_t size_ = 0;
};

/// Dimension of the associative algebra generated by the maps and the identity.
inline std::size_t enveloping_dimension(const Field& f, std::size_t d, const std::vector<Matrix>& maps) {
  EchelonBasis basis(f, d * d);
  std::vector<Matrix> queue{Matrix::identity(f, d)};
  basis.insert(queue.front().data());
  for (std::size_t head = 0; head < queue.size() && !basis.full(); ++head)
    for (const auto& m : maps) {
      Matrix next = queue[head] * m;
      if (basis.insert(next.data())) queue.push_back(std::move(next));
      if (basis.full()) break;
    }
  return basis.dim();
}

struct IrreducibilityReport {
  bool irreducible = false;
  std::string method;               // "exhaustive", "burnside" or "trivial"
  std::optional<Subspace> witness;  // proper invariant subspace, when found
};

/// Decides whether F^d has a nonzero proper subspace invariant under all maps.
/// Within the projective-point cap every point is spun; beyond it, a full
/// enveloping algebra (Burnside) certifies irreducibility, otherwise
/// TooLargeForExhaustive.
inline IrreducibilityReport irreducibility(const Field& f, std::size_t d, const std::vector<Matrix>& maps,
                                           const Limits& limits = {}) {
  IrreducibilityReport rep;
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "zero-dimensional module");
  if (d == 1) {
    rep.irreducible = true;
    rep.method = "trivial";
    return rep;
  }
  const ProjectiveRange points(f.order(), d);
  if (points.size() > limits.projective_points) {
    if (enveloping_dimension(f, d, maps) == d * d) {
      rep.irreducible = true;
      rep.method = "burnside";
      return rep;
    }
    throw Error(ErrorCode::TooLargeForExhaustive,
                std::to_string(points.size()) + " projective points exceed the cap of " +
                    std::to_string(limits.projective_points));
  }
  rep.method = "exhaustive";
  // Smallest index whose spin is proper; workers past it stop early.
  std::atomic<std::uint64_t> best{UINT64_MAX};
  parallel_chunks(points.size(), limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i) {
      if (detail::spin_dim(f, d, points.point(i), maps) < d) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {}
        return;
      }
    }
  });
  rep.irreducible = best.load() == UINT64_MAX;
  if (!rep.irreducible) rep.witness = spin(f, d, {points.point(best.load())}, maps);
  return rep;
}

inline bool is_irreducible(const ModuleRep& rep, const Limits& limits = {}) {
  return irreducibility(rep.field(), rep.dim(), rep.gens(), limits).irreducible;
}

/// Basis of {psi : psi * gW = gV * psi for every aligned pair}, psi of shape
/// dim V x dim W, in canonical (RREF of the flattened matrices) order.
inline std::vector<Matrix> hom_module_space(const ModuleRep& V, const ModuleRep& W) {
  if (V.size() != W.size()) throw Error(ErrorCode::GeneratorCountMismatch, "hom between unaligned modules");
  require_same_field(V.field(), W.field());
  const Field& f = V.field();
  const std::size_t dv = V.dim(), dw = W.dim(), n = dv * dw;
  Matrix sys(f, V.size() * n, n);
  // Unknown psi_{ac} sits at column a*dw + c; equation (g, a, b) is
  // sum_c psi_ac gW_cb - sum_c gV_ac psi_cb = 0.
  for (std::size_t g = 0; g < V.size(); ++g) {
    const Matrix& gv = V.gens()[g];
    const Matrix& gw = W.gens()[g];
    for (std::size_t a = 0; a < dv; ++a)
      for (std::size_t b = 0; b < dw; ++b) {
        const std::size_t row = g * n + a * dw + b;
        for (std::size_t c = 0; c < dw; ++c) sys(row, a * dw + c) = f.add(sys(row, a * dw + c), gw(c, b));
        for (std::size_t c = 0; c < dv; ++c) sys(row, c * dw + b) = f.sub(sys(row, c * dw + b), gv(a, c));
      }
  }
  const auto kernel = rref_solve(sys).kernel;
  const Subspace canon = Subspace::span(f, n, kernel);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < canon.dim(); ++r) {
    Matrix psi(f, dv, dw);
    for (std::size_t i = 0; i < n; ++i) psi(i / dw, i % dw) = canon.basis()(r, i);
    out.push_back(std::move(psi));
  }
  return out;
}

/// True iff psi * gW = gV * psi for every aligned generator pair.
inline bool is_intertwiner(const Matrix& psi, const ModuleRep& V, const ModuleRep& W) {
  if (V.size() != W.size()) throw Error(ErrorCode::GeneratorCountMismatch, "unaligned modules");
  for (std::size_t g = 0; g < V.size(); ++g)
    if (!(psi * W.gens()[g] == V.gens()[g] * psi)) return false;
  return true;
}

}  // namespace ucs
