#pragma once

// The metacyclic family: A a cyclic shift, B = diag(zeta^{b^i}), and the
// algebra read off the invariant summand spanned by consecutive wedges.

#include <tuple>

#include "ucsiac/algebra.hpp"
#include "ucsiac/module.hpp"

namespace ucs {

struct MetacyclicResult {
  std::size_t r = 0;
  Scalar zeta = 0;
  Matrix A, B;
  Subspace U1, U2;
  Matrix psi;  // r x wedge_dim(r), e_i -> e_{i+1} ^ e_{i+2}
  ACAlgebra algebra;
  bool relations = false;      // A^r = B^n = 1, BA = AB^{b^-1}
  bool decomposition = false;  // U1 + U2 = wedge^2 V, both invariant
  bool psi_intertwines = false;
  bool table_matches = false;  // algebra from psi equals the closed-form table
  bool simple = false;
  bool generators_are_automorphisms = false;
  bool ok() const {
    return relations && decomposition && psi_intertwines && table_matches && simple && generators_are_automorphisms;
  }
};

namespace detail {

inline Vec signed_wedge(std::size_t a, std::size_t b, std::size_t r, const Field& f) {
  Vec v(wedge_dim(r), 0);
  if (a < b) v[pair_index(a, b, r)] = 1;
  else v[pair_index(b, a, r)] = f.neg(1);
  return v;
}

}  // namespace detail

inline MetacyclicResult family_sec6(std::uint64_t b, std::uint64_t n, const Field& f, const Limits& limits = {}) {
  if (b < 2) throw Error(ErrorCode::BadHypothesis, "b must be at least 2");
  if (n <= 1) throw Error(ErrorCode::BadHypothesis, "n must exceed 1");
  if ((b * b + b - 1) % n != 0)
    throw Error(ErrorCode::BadHypothesis, std::to_string(n) + " does not divide b^2 + b - 1");
  if ((f.order() - 1) % n != 0)
    throw Error(ErrorCode::BadHypothesis, std::to_string(n) + " does not divide q - 1");
  std::size_t r = 1;
  for (std::uint64_t x = b % n; x != 1; x = x * b % n) ++r;
  if (r == 1) throw Error(ErrorCode::BadHypothesis, "b has order 1 modulo n");

  MetacyclicResult out;
  out.r = r;
  out.zeta = element_of_order(f, n).code();
  out.A = Matrix(f, r, r);
  out.B = Matrix(f, r, r);
  std::uint64_t e = 1;  // b^i mod n
  for (std::size_t i = 0; i < r; ++i) {
    out.A(i, (i + 1) % r) = 1;
    out.B(i, i) = f.pow(out.zeta, e);
    e = e * b % n;
  }
  std::uint64_t b_inv = 1;
  for (std::size_t i = 1; i < r; ++i) b_inv = b_inv * b % n;  // b^{r-1} = b^{-1}
  const Matrix I = Matrix::identity(f, r);
  out.relations = out.A.pow(static_cast<std::int64_t>(r)) == I && out.B.pow(static_cast<std::int64_t>(n)) == I &&
                  out.B * out.A == out.A * out.B.pow(static_cast<std::int64_t>(b_inv));

  const ModuleRep V(f, r, {out.A, out.B}, {"A", "B"});
  const ModuleRep W = V.wedge();
  std::vector<Vec> u1, u2;
  std::vector<bool> consecutive(wedge_dim(r), false);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t j = (i + 1) % r;
    consecutive[pair_index(std::min(i, j), std::max(i, j), r)] = true;
    u1.push_back(detail::signed_wedge(i, j, r, f));
  }
  for (std::size_t k = 0; k < wedge_dim(r); ++k)
    if (!consecutive[k]) u2.push_back(vec::unit(wedge_dim(r), k));
  out.U1 = Subspace::span(f, wedge_dim(r), u1);
  out.U2 = Subspace::span(f, wedge_dim(r), u2);
  out.decomposition = (out.U1 + out.U2).is_full() && out.U1.dim() == r && out.U1.intersect(out.U2).is_zero();
  for (const auto& g : W.gens())
    out.decomposition = out.decomposition && out.U1.is_invariant(g) && out.U2.is_invariant(g);

  out.psi = Matrix(f, r, wedge_dim(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Vec w = detail::signed_wedge((i + 1) % r, (i + 2) % r, r, f);
    for (std::size_t k = 0; k < w.size(); ++k) out.psi(i, k) = w[k];
  }
  out.psi_intertwines = is_intertwiner(out.psi, V, W);

  // Product map: project onto U1 along U2, then invert psi.
  Matrix T(f, wedge_dim(r), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < wedge_dim(r); ++k)
      if (out.psi(i, k) != 0) T(k, i) = f.inv(out.psi(i, k));
  out.algebra = ACAlgebra::from_tensor(T);

  std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>> table;
  auto unit = [&](std::size_t k, std::int64_t s) {
    std::vector<std::int64_t> c(r, 0);
    c[k] = s;
    return c;
  };
  table.push_back({0, 1, unit(r - 1, 1)});
  for (std::size_t i = 2; i < r; ++i) table.push_back({i - 1, i, unit(i - 2, 1)});
  table.push_back({0, r - 1, unit(r - 2, -1)});
  out.table_matches = ACAlgebra::from_ints(f, r, table) == out.algebra;

  out.simple = is_simple(out.algebra, limits);
  out.generators_are_automorphisms = is_automorphism(out.algebra, out.A) && is_automorphism(out.algebra, out.B);
  return out;
}

}  // namespace ucs
