#pragma once

// Exterior self-quotient modules: algebras from intertwiners wedge^2 V -> V,
// deleted permutation modules, AGL(1,t) generators and the 4-dimensional census.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ucsiac/algebra.hpp"
#include "ucsiac/isomorphism.hpp"
#include "ucsiac/module.hpp"

namespace ucs {

using Permutation = std::vector<std::size_t>;  // point x goes to perm[x]

struct EsqStructure {
  Matrix psi;  // wedge_dim(d) x d, surjective intertwiner
  ACAlgebra algebra;
};

/// Elements of the span of `basis` by coefficient index (base q digits).
inline Matrix combination(const std::vector<Matrix>& basis, std::uint64_t idx) {
  const Field& f = basis.front().field();
  Matrix out(f, basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const Scalar c = static_cast<Scalar>(idx % f.order());
    idx /= f.order();
    if (c != 0) out = out + b.scaled(c);
  }
  return out;
}

/// Every surjective psi in Hom(wedge^2 V, V), each with its algebra.
inline std::vector<EsqStructure> esq_structures(const ModuleRep& V, const Limits& limits = {}) {
  if (V.dim() < 2) throw Error(ErrorCode::InvalidArgument, "ESQ structures need dimension >= 2");
  if (!is_irreducible(V, limits)) throw Error(ErrorCode::ReducibleModule, "module is reducible");
  const auto hom = hom_module_space(V.wedge(), V);
  std::vector<EsqStructure> out;
  if (hom.empty()) return out;
  const std::uint64_t n = checked_pow(V.field().order(), hom.size());
  if (n > limits.hom_elements) throw Error(ErrorCode::TooLargeForExhaustive, "hom space too large to enumerate");
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    Matrix psi = combination(hom, idx);
    if (psi.rank() != V.dim()) continue;
    ACAlgebra L = ACAlgebra::from_tensor(psi);
    out.push_back({std::move(psi), std::move(L)});
  }
  return out;
}

/// Module on u_i = x_i - x_{t-1} (i < t-1), the quotient of the permutation
/// module by the all-ones line.
inline ModuleRep deleted_perm_module(const std::vector<Permutation>& perms, std::size_t t, const Field& f) {
  if (t < 2) throw Error(ErrorCode::UnsupportedT, "need at least two points");
  if (t % f.characteristic() == 0)
    throw Error(ErrorCode::CharacteristicDividesT, "characteristic divides t = " + std::to_string(t));
  const std::size_t d = t - 1;
  std::vector<Matrix> gens;
  for (const auto& s : perms) {
    if (s.size() != t) throw Error(ErrorCode::DimensionMismatch, "permutation degree");
    std::vector<bool> hit(t, false);
    for (auto x : s) {
      if (x >= t || hit[x]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
      hit[x] = true;
    }
    // u_i -> x_{s(i)} - x_{s(t-1)} = u_{s(i)} - u_{s(t-1)} with u_{t-1} = 0.
    Matrix M(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (s[i] < d) M(i, s[i]) = f.add(M(i, s[i]), 1);
      if (s[d] < d) M(i, s[d]) = f.sub(M(i, s[d]), 1);
    }
    gens.push_back(std::move(M));
  }
  return ModuleRep(f, d, std::move(gens));
}

/// Generators of AGL(1,t) (or AGammaL(1,t)) on the points of F_t, labelled by
/// element code: x -> x + 1, x -> g x for the least primitive g, and x -> x^p.
inline std::vector<Permutation> agl_generators(std::size_t t, bool with_frobenius) {
  if (t < 2 || t > 32) throw Error(ErrorCode::UnsupportedT, "t must be a prime power <= 32");
  std::uint32_t p = 0, k = 0;
  for (std::uint32_t c = 2; c <= t; ++c)
    if (t % c == 0) {
      p = c;
      break;
    }
  std::size_t rest = t;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::UnsupportedT, std::to_string(t) + " is not a prime power");
  const Field F = Field::any_characteristic(p, k);
  Scalar g = 0;
  for (Scalar a = 1; a < t; ++a)
    if (F.multiplicative_order(a) == t - 1) {
      g = a;
      break;
    }
  std::vector<Permutation> out;
  Permutation shift(t), scale(t), frob(t);
  for (Scalar x = 0; x < t; ++x) {
    shift[x] = F.add(x, 1);
    scale[x] = F.mul(g, x);
    frob[x] = F.pow(x, p);
  }
  out.push_back(shift);
  out.push_back(scale);
  if (with_frobenius && k > 1) out.push_back(frob);
  return out;
}

/// Cycle notation, 0-based points, fixed points omitted.
inline std::string cycle_string(const Permutation& s) {
  std::string out;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (seen[x] || s[x] == x) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y);
      first = false;
      y = s[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

struct CensusClass {
  ACAlgebra representative;
  std::uint64_t aut_order = 0;
  std::uint64_t orbit_size = 0;  // number of product maps psi in the class
};

struct CensusReport {
  std::uint32_t q = 0;
  std::string module;  // "C5" or "AGL(1,5)"
  std::uint64_t hom_dim = 0;
  std::uint64_t candidates = 0;
  std::uint64_t orbits = 0;
  std::vector<CensusClass> classes;
  // For q = +-2 mod 5: the AGL(1,5) structures lie among the C5 ones and
  // land in an existing class.
  bool cross_checked = false;
  bool cross_check_ok = true;
};

namespace detail {

/// An element of multiplicative order |E| - 1 in the (field) endomorphism
/// ring spanned by `endo`.
inline Matrix unit_group_generator(const std::vector<Matrix>& endo) {
  const Field& f = endo.front().field();
  const std::uint64_t size = checked_pow(f.order(), endo.size());
  const std::uint64_t units = size - 1;
  const auto primes = prime_factors(units);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    const Matrix c = combination(endo, idx);
    if (c.determinant() == 0) continue;
    if (!c.pow(static_cast<std::int64_t>(units)).is_identity()) continue;
    bool generator = true;
    for (auto l : primes)
      if (c.pow(static_cast<std::int64_t>(units / l)).is_identity()) {
        generator = false;
        break;
      }
    if (generator) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "endomorphism ring is not a field");
}

}  // namespace detail

/// Isomorphism classes of the algebras carried by the C5 (q = +-2 mod 5) or
/// AGL(1,5) (q = +-1 mod 5) deleted permutation module over F_q. Candidates
/// are first reduced to orbits of the module centralizer, which acts by
/// psi -> wedge^2(c)^-1 psi c and preserves the isomorphism type.
inline CensusReport dim4_census(std::uint32_t q, const Limits& limits = {}) {
  if (q % 5 == 0 || q > 13) throw Error(ErrorCode::UnsupportedQ, "census supports q in {3, 7, 9, 11, 13}");
  const Field f = Field::of_order(q);
  CensusReport rep;
  rep.q = q;
  const bool plus_minus_one = q % 5 == 1 || q % 5 == 4;
  std::vector<Permutation> perms;
  if (plus_minus_one) {
    perms = agl_generators(5, false);
    rep.module = "AGL(1,5)";
  } else {
    perms = {agl_generators(5, false).front()};
    rep.module = "C5";
  }
  const ModuleRep V = deleted_perm_module(perms, 5, f);
  if (!is_irreducible(V, limits)) throw Error(ErrorCode::ReducibleModule, rep.module + " module is reducible");
  const auto hom = hom_module_space(V.wedge(), V);
  rep.hom_dim = hom.size();
  const std::uint64_t n = checked_pow(q, hom.size());
  if (n > limits.hom_elements) throw Error(ErrorCode::TooLargeForExhaustive, "hom space too large");

  // Coordinates of psi in the canonical hom basis sit at its pivot entries.
  std::vector<std::size_t> pivots;
  {
    std::vector<Vec> flat;
    for (const auto& h : hom) flat.push_back(h.data());
    pivots = Subspace::span(f, hom.front().data().size(), flat).pivots();
  }
  auto index_of = [&](const Matrix& psi) {
    std::uint64_t idx = 0;
    for (std::size_t t = pivots.size(); t-- > 0;) idx = idx * q + psi.data()[pivots[t]];
    return idx;
  };

  const Matrix c = detail::unit_group_generator(hom_module_space(V, V));
  const Matrix c_wedge_inv = wedge_square(c).inverse();
  std::vector<char> seen(n, 0);
  struct Orbit {
    std::uint64_t first = 0;
    std::uint64_t size = 0;
    Matrix psi;
  };
  std::vector<Orbit> orbits;
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    if (seen[idx]) continue;
    Matrix psi = combination(hom, idx);
    if (psi.rank() != V.dim()) {
      seen[idx] = 1;
      continue;
    }
    Orbit o{idx, 0, psi};
    Matrix cur = psi;
    std::uint64_t cur_idx = idx;
    do {
      seen[cur_idx] = 1;
      ++o.size;
      cur = c_wedge_inv * cur * c;
      cur_idx = index_of(cur);
    } while (cur_idx != idx);
    rep.candidates += o.size;
    orbits.push_back(std::move(o));
  }
  rep.orbits = orbits.size();

  for (const auto& o : orbits) {
    const ACAlgebra L = ACAlgebra::from_tensor(o.psi);
    bool placed = false;
    for (auto& cls : rep.classes)
      if (are_isomorphic(cls.representative, L, limits)) {
        cls.orbit_size += o.size;
        placed = true;
        break;
      }
    if (!placed) rep.classes.push_back({L, 0, o.size});
  }
  for (auto& cls : rep.classes) cls.aut_order = automorphism_count(cls.representative, limits);
  std::stable_sort(rep.classes.begin(), rep.classes.end(),
                   [](const CensusClass& x, const CensusClass& y) { return x.aut_order > y.aut_order; });

  if (!plus_minus_one) {
    const ModuleRep V_agl = deleted_perm_module(agl_generators(5, false), 5, f);
    if (is_irreducible(V_agl, limits)) {
      rep.cross_checked = true;
      for (const auto& s : esq_structures(V_agl, limits)) {
        bool found = false;
        for (const auto& cls : rep.classes) found = found || are_isomorphic(cls.representative, s.algebra, limits);
        rep.cross_check_ok = rep.cross_check_ok && found && is_intertwiner(s.psi, V.wedge(), V);
      }
    }
  }
  return rep;
}

}  // namespace ucs
