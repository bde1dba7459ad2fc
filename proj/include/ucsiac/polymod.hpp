#pragma once

// Homogeneous polynomial modules V_m of GL(2), Clebsch-Gordan decompositions
// of V_m (x) V_n and of the exterior/symmetric squares, and the algebras
// carried by Hom(wedge^2 V_m, V_m).

#include <string>
#include <vector>

#include "ucsiac/algebra.hpp"
#include "ucsiac/isomorphism.hpp"
#include "ucsiac/module.hpp"

namespace ucs {

/// [[1,1],[0,1]] and [[1,0],[1,1]].
inline std::vector<Matrix> sl2_generators(const Field& f) {
  return {Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{1, 0}, {1, 1}})};
}

/// SL(2) generators plus diag(w, 1) for the least primitive w.
inline std::vector<Matrix> gl2_generators(const Field& f) {
  auto g = sl2_generators(f);
  Matrix d = Matrix::identity(f, 2);
  d(0, 0) = element_of_order(f, f.order() - 1).code();
  g.push_back(d);
  return g;
}

/// Action of g on V_m. Basis index k is X^{m-k} Y^k, and
/// X^i Y^j . g = (g00 X + g01 Y)^i (g10 X + g11 Y)^j, so V_1 is the natural module.
inline Matrix vm_matrix(std::size_t m, const Matrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "need a 2x2 matrix");
  const Field& f = g.field();
  // Polynomials in (X, Y) of fixed degree, stored by Y-degree.
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return out;
  };
  const Vec x_img = {g(0, 0), g(0, 1)};
  const Vec y_img = {g(1, 0), g(1, 1)};
  Matrix M(f, m + 1, m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    Vec poly = {1};
    for (std::size_t t = 0; t < m - k; ++t) poly = mul(poly, x_img);
    for (std::size_t t = 0; t < k; ++t) poly = mul(poly, y_img);
    for (std::size_t t = 0; t <= m; ++t) M(k, t) = poly[t];
  }
  return M;
}

inline ModuleRep vm_module(std::size_t m, const Field& f, const std::vector<Matrix>& gens) {
  if (m >= f.characteristic())
    throw Error(ErrorCode::DegreeTooLargeForChar,
                "m = " + std::to_string(m) + " needs m < " + std::to_string(f.characteristic()));
  std::vector<Matrix> mats;
  for (const auto& g : gens) mats.push_back(vm_matrix(m, g));
  return ModuleRep(f, m + 1, std::move(mats));
}

/// det^i (x) V_k, the model for summand identification.
inline ModuleRep model_module(std::size_t det_power, std::size_t k, const Field& f, const std::vector<Matrix>& gens) {
  std::vector<Matrix> mats;
  for (const auto& g : gens) mats.push_back(vm_matrix(k, g).scaled(f.pow(g.determinant(), det_power)));
  return ModuleRep(f, k + 1, std::move(mats));
}

struct CgSummand {
  std::size_t det_power = 0;
  std::size_t degree = 0;  // V_degree
  std::size_t multiplicity = 0;
  std::size_t dim() const { return degree + 1; }
  std::string name() const {
    std::string s;
    if (det_power == 1) s = "det (x) ";
    else if (det_power > 1) s = "det^" + std::to_string(det_power) + " (x) ";
    return s + "V" + std::to_string(degree);
  }
  bool operator==(const CgSummand&) const = default;
};

/// An explicit submodule of the ambient tensor module with an injective
/// intertwiner from its model.
struct CgPiece {
  CgSummand summand;
  Subspace submodule;
  Matrix embedding;  // dim x ambient, model -> ambient
  bool intertwines = false;
};

struct CgTensorResult {
  std::size_t m = 0, n = 0;
  std::vector<CgSummand> multiplicities;  // from Hom dimensions against the models
  std::vector<CgSummand> recursive;       // from the recursion V_{m,n} = det (x) V_{m-1,n-1} + V_{m+n}
  std::vector<CgPiece> pieces;            // explicit realization of `recursive`
  Matrix pi;     // V_{m,n} -> V_{m+n}
  Matrix delta;  // V_{m-1,n-1} -> V_{m,n}
  std::vector<Vec> W_basis;
  std::size_t rank_pi = 0, rank_delta = 0;
  bool pi_delta_zero = false;     // im delta inside ker pi
  bool image_is_kernel = false;   // im delta = ker pi
  bool delta_meets_W = true;      // im delta n W != 0
  bool direct_sum_full = false;   // im delta + W = V_{m,n}
  bool pieces_direct = false;     // explicit pieces form a direct sum decomposition
  bool ok() const {
    return rank_pi == m + n + 1 && rank_delta == m * n && pi_delta_zero && image_is_kernel && !delta_meets_W &&
           direct_sum_full && pieces_direct && multiplicities == recursive;
  }
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Multiplication by X1 Y2 - Y1 X2 from V_{m-1,n-1} into V_{m,n}; index of
/// X1^{m-a} Y1^a X2^{n-b} Y2^b is a (n+1) + b.
inline Matrix delta_matrix(std::size_t m, std::size_t n, const Field& f) {
  Matrix D(f, m * n, (m + 1) * (n + 1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = a * n + b;
      D(row, a * (n + 1) + b + 1) = f.add(D(row, a * (n + 1) + b + 1), 1);
      D(row, (a + 1) * (n + 1) + b) = f.sub(D(row, (a + 1) * (n + 1) + b), 1);
    }
  return D;
}

/// Evaluation X2 -> X1, Y2 -> Y1 from V_{m,n} to V_{m+n}.
inline Matrix pi_matrix(std::size_t m, std::size_t n, const Field& f) {
  Matrix P(f, (m + 1) * (n + 1), m + n + 1);
  for (std::size_t a = 0; a <= m; ++a)
    for (std::size_t b = 0; b <= n; ++b) P(a * (n + 1) + b, a + b) = 1;
  return P;
}

/// V_{m+n} -> V_{m,n}, X^{m+n-t} Y^t -> h_t / C(m+n, t) with
/// h_t = sum C(m,i) C(n,j) X1^i Y1^{m-i} X2^j Y2^{n-j} over i + j = m + n - t.
inline Matrix polarization(std::size_t m, std::size_t n, const Field& f) {
  Matrix E(f, m + n + 1, (m + 1) * (n + 1));
  for (std::size_t t = 0; t <= m + n; ++t) {
    const Scalar scale = f.inv(f.from_int(static_cast<std::int64_t>(binomial(m + n, t))));
    for (std::size_t a = 0; a <= m; ++a) {
      if (t < a || t - a > n) continue;
      const std::size_t b = t - a;
      const Scalar c = f.from_int(static_cast<std::int64_t>(binomial(m, a) * binomial(n, b)));
      E(t, a * (n + 1) + b) = f.mul(c, scale);
    }
  }
  return E;
}

/// Summands of V_{m,n} found by Hom dimension against every model det^i (x) V_k
/// compatible with the central character (scalars act by lambda^{m+n}).
inline std::vector<CgSummand> hom_multiplicities(const ModuleRep& M, std::size_t total_degree, const Field& f,
                                                 const std::vector<Matrix>& gens) {
  std::vector<CgSummand> out;
  const std::size_t e = f.order() - 1;
  for (std::size_t k = total_degree + 1; k-- > 0;)
    for (std::size_t i = 0; i < e; ++i) {
      if ((2 * i + k) % e != total_degree % e) continue;
      const auto hom = hom_module_space(model_module(i, k, f, gens), M);
      if (!hom.empty()) out.push_back({i, k, hom.size()});
    }
  return out;
}

inline void check_pieces(std::vector<CgPiece>& pieces, std::size_t ambient, const Field& f, bool& direct) {
  Subspace sum = Subspace::zero(f, ambient);
  std::size_t dims = 0;
  for (const auto& p : pieces) {
    sum = sum + p.submodule;
    dims += p.submodule.dim();
  }
  direct = sum.is_full() && dims == ambient;
  for (const auto& p : pieces) direct = direct && p.intertwines && p.submodule.dim() == p.summand.dim();
}

}  // namespace detail

/// The recursion applied i times: det^i (x) V_{m+n-2i} sits in V_{m,n} as the
/// image of W_{m-i,n-i} under the chain of delta maps.
inline std::vector<CgPiece> cg_pieces(std::size_t m, std::size_t n, const Field& f, const std::vector<Matrix>& gens) {
  const ModuleRep Vmn = vm_module(m, f, gens).tensor(vm_module(n, f, gens));
  std::vector<CgPiece> out;
  for (std::size_t i = 0; i <= std::min(m, n); ++i) {
    Matrix E = detail::polarization(m - i, n - i, f);
    for (std::size_t s = i; s > 0; --s) E = E * detail::delta_matrix(m - s + 1, n - s + 1, f);
    CgPiece p;
    p.summand = {i, m + n - 2 * i, 1};
    p.submodule = Subspace::span(f, Vmn.dim(), E.row_list());
    p.intertwines = E.rank() == E.rows() && is_intertwiner(E, model_module(i, m + n - 2 * i, f, gens), Vmn);
    p.embedding = std::move(E);
    out.push_back(std::move(p));
  }
  return out;
}

inline CgTensorResult cg_tensor_decompose(std::size_t m, std::size_t n, const Field& f,
                                          const std::vector<Matrix>& gens) {
  if (m > n) throw Error(ErrorCode::InvalidArgument, "need m <= n");
  if (m + n >= f.characteristic())
    throw Error(ErrorCode::CharTooSmall, "need m + n < " + std::to_string(f.characteristic()));
  CgTensorResult out;
  out.m = m;
  out.n = n;
  const ModuleRep Vmn = vm_module(m, f, gens).tensor(vm_module(n, f, gens));
  const std::size_t dim = Vmn.dim();
  out.pi = detail::pi_matrix(m, n, f);
  out.rank_pi = out.pi.rank();
  out.delta = m > 0 ? detail::delta_matrix(m, n, f) : Matrix(f, 0, dim);
  out.rank_delta = m > 0 ? out.delta.rank() : 0;
  const Subspace im_delta = Subspace::span(f, dim, out.delta.row_list());
  out.pi_delta_zero = m == 0 || (out.delta * out.pi).rank() == 0;
  out.image_is_kernel = out.pi_delta_zero && im_delta.dim() + out.rank_pi == dim;
  for (std::size_t t = 0; t <= m + n; ++t) {
    Vec h(dim, 0);
    for (std::size_t a = 0; a <= m; ++a)
      if (t >= a && t - a <= n)
        h[a * (n + 1) + t - a] = f.from_int(static_cast<std::int64_t>(detail::binomial(m, a) * detail::binomial(n, t - a)));
    out.W_basis.push_back(std::move(h));
  }
  const Subspace W = Subspace::span(f, dim, out.W_basis);
  out.delta_meets_W = !im_delta.intersect(W).is_zero();
  out.direct_sum_full = (im_delta + W).is_full();

  out.pieces = cg_pieces(m, n, f, gens);
  detail::check_pieces(out.pieces, dim, f, out.pieces_direct);
  for (const auto& p : out.pieces) out.recursive.push_back(p.summand);
  out.multiplicities = detail::hom_multiplicities(Vmn, m + n, f, gens);
  return out;
}

struct CgSquareResult {
  std::size_t m = 0;
  std::vector<CgSummand> wedge_multiplicities;  // Hom dimensions into wedge^2 V_m
  std::vector<CgSummand> sym_multiplicities;    // Hom dimensions into S^2 V_m
  std::vector<CgPiece> wedge_pieces;            // odd i, inside antisymmetric tensors
  std::vector<CgPiece> sym_pieces;              // even i, inside symmetric tensors
  bool wedge_direct = false;
  bool sym_direct = false;
  bool ok() const {
    auto names = [](const std::vector<CgPiece>& ps) {
      std::vector<CgSummand> s;
      for (const auto& p : ps) s.push_back(p.summand);
      return s;
    };
    return wedge_direct && sym_direct && wedge_multiplicities == names(wedge_pieces) &&
           sym_multiplicities == names(sym_pieces);
  }
};

inline CgSquareResult cg_wedge_sym_decompose(std::size_t m, const Field& f, const std::vector<Matrix>& gens) {
  if (2 * m >= f.characteristic())
    throw Error(ErrorCode::CharTooSmall, "need 2m < " + std::to_string(f.characteristic()));
  CgSquareResult out;
  out.m = m;
  const std::size_t d = m + 1;
  const std::size_t dim = d * d;
  // Antisymmetric and symmetric tensors in V_m (x) V_m.
  std::vector<Vec> anti, sym;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Vec s(dim, 0);
      s[a * d + b] = f.add(s[a * d + b], 1);
      s[b * d + a] = f.add(s[b * d + a], 1);
      sym.push_back(s);
      if (a == b) continue;
      Vec w(dim, 0);
      w[a * d + b] = 1;
      w[b * d + a] = f.neg(1);
      anti.push_back(std::move(w));
    }
  const Subspace A = Subspace::span(f, dim, anti);
  const Subspace S = Subspace::span(f, dim, sym);
  for (auto& p : cg_pieces(m, m, f, gens)) {
    const bool odd = p.summand.det_power % 2 == 1;
    p.intertwines = p.intertwines && p.submodule.is_subspace_of(odd ? A : S);
    (odd ? out.wedge_pieces : out.sym_pieces).push_back(std::move(p));
  }
  auto fills = [&](const std::vector<CgPiece>& ps, const Subspace& target) {
    Subspace sum = Subspace::zero(f, dim);
    std::size_t dims = 0;
    for (const auto& p : ps) {
      if (!p.intertwines || p.submodule.dim() != p.summand.dim()) return false;
      sum = sum + p.submodule;
      dims += p.submodule.dim();
    }
    return sum == target && dims == target.dim();
  };
  out.wedge_direct = fills(out.wedge_pieces, A);
  out.sym_direct = fills(out.sym_pieces, S);

  const ModuleRep V = vm_module(m, f, gens);
  out.wedge_multiplicities = detail::hom_multiplicities(V.wedge(), 2 * m, f, gens);
  out.sym_multiplicities = detail::hom_multiplicities(V.sym(), 2 * m, f, gens);
  return out;
}

struct GammaResult {
  std::size_t m = 0;
  std::size_t hom_dim = 0;
  Matrix psi;  // wedge_dim(m+1) x (m+1), first nonzero entry 1
  ACAlgebra algebra;
  bool generators_are_automorphisms = false;
  bool simple = false;
  bool perfect = false;  // <L, L> = L
  bool ok() const { return hom_dim == 1 && generators_are_automorphisms && simple && perfect; }
};

/// The algebra on V_m given by the unique SL(2,p)-intertwiner wedge^2 V_m -> V_m.
inline GammaResult gamma_construction(std::size_t m, const Field& f, const Limits& limits = {}) {
  if (m % 4 != 2) throw Error(ErrorCode::BadCongruence, "need m = 2 mod 4");
  if (2 * m >= f.characteristic())
    throw Error(ErrorCode::CharTooSmall, "need 2m < " + std::to_string(f.characteristic()));
  const auto gens = sl2_generators(f);
  const ModuleRep V = vm_module(m, f, gens);
  const auto hom = hom_module_space(V.wedge(), V);
  GammaResult out;
  out.m = m;
  out.hom_dim = hom.size();
  if (hom.size() != 1)
    throw Error(ErrorCode::UnexpectedHomDimension, "Hom(wedge^2 V_m, V_m) has dimension " + std::to_string(hom.size()));
  out.psi = hom.front();
  for (auto x : out.psi.data())
    if (x != 0) {
      out.psi = out.psi.scaled(f.inv(x));
      break;
    }
  out.algebra = ACAlgebra::from_tensor(out.psi);
  out.generators_are_automorphisms = true;
  for (const auto& g : V.gens()) out.generators_are_automorphisms = out.generators_are_automorphisms && is_automorphism(out.algebra, g);
  out.simple = is_simple(out.algebra, limits);
  out.perfect = derived_subspace(out.algebra).is_full();
  return out;
}

inline ACAlgebra gamma_algebra(std::size_t m, const Field& f, const Limits& limits = {}) {
  return gamma_construction(m, f, limits).algebra;
}

}  // namespace ucs
