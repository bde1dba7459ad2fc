#pragma once

// Passage between the groups of pc_group.hpp and algebras over F_p.

#include <random>
#include <string>
#include <vector>

#include "ucsiac/algebra.hpp"
#include "ucsiac/pc_group.hpp"

namespace ucs {

/// <x, y> = (p-th root of [x, y]) read on G/Phi(G), computed by group
/// arithmetic on the generators.
inline ACAlgebra L_of_G(const PcGroup& G) {
  const Field f = Field::make(G.prime());
  const std::size_t r = G.rank();
  std::vector<TableEntry> entries;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const GroupElem c = G.comm(G.gen(i), G.gen(j));
      if (!G.is_central_form(c)) throw Error(ErrorCode::RootUndefined, "commutator of generators is not central");
      const GroupElem root = G.p_root(c);
      if (!(G.p_power(root) == c)) throw Error(ErrorCode::RootUndefined, "p-th root check failed");
      entries.push_back({i, j, to_vec(root.a)});
    }
  return ACAlgebra::make(f, r, entries);
}

inline PcGroup G_of_L(const ACAlgebra& L) { return PcGroup::from_algebra(L); }

struct RoundTrip {
  bool tables_identical = false;
  bool relations_hold = false;
  std::vector<std::string> log;
};

/// L -> G(L) -> L(G(L)), compared entrywise.
inline RoundTrip round_trip(const ACAlgebra& L) {
  RoundTrip rt;
  const PcGroup G = G_of_L(L);
  const auto bad = G.presentation_violations();
  rt.relations_hold = bad.empty();
  rt.log.push_back("group of order " + std::to_string(G.prime()) + "^" + std::to_string(2 * G.rank()));
  for (const auto& b : bad) rt.log.push_back("violated: " + b);
  const ACAlgebra back = L_of_G(G);
  rt.tables_identical = back == L;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (L.structure(i, j) != back.structure(i, j))
        rt.log.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) + ") differs");
  return rt;
}

/// A homomorphism given by images of g_1..g_r and z_1..z_r.
struct GroupMap {
  std::vector<GroupElem> g_images;
  std::vector<GroupElem> z_images;
};

/// Image of (a, b) = prod g'_i^a_i prod z'_i^b_i.
inline GroupElem apply_map(const PcGroup& G, const GroupMap& m, const GroupElem& u) {
  GroupElem out = G.identity();
  for (std::size_t i = 0; i < G.rank(); ++i) out = G.mul(out, G.pow(m.g_images[i], u.a[i]));
  for (std::size_t i = 0; i < G.rank(); ++i) out = G.mul(out, G.pow(m.z_images[i], u.b[i]));
  return out;
}

/// The images satisfy every defining relation, so the assignment extends to
/// an endomorphism.
inline bool satisfies_relations(const PcGroup& G, const GroupMap& m) {
  const std::size_t r = G.rank();
  const GroupElem e = G.identity();
  for (std::size_t i = 0; i < r; ++i) {
    if (!(G.pow(m.g_images[i], G.prime()) == m.z_images[i])) return false;
    if (!(G.pow(m.z_images[i], G.prime()) == e)) return false;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(G.comm(m.z_images[j], m.g_images[i]) == e)) return false;
      if (!(G.comm(m.z_images[i], m.z_images[j]) == e)) return false;
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto c = G.commutator_exponents(i, j);
      GroupElem rhs = e;
      for (std::size_t k = 0; k < r; ++k) rhs = G.mul(rhs, G.pow(m.z_images[k], c[k]));
      if (!(G.comm(m.g_images[i], m.g_images[j]) == rhs)) return false;
    }
  }
  return true;
}

struct Lift {
  GroupMap map;
  bool valid = false;
};

/// g_i -> (e_i M, 0), z_i -> (0, e_i M); valid iff the relations survive.
inline Lift lift_automorphism(const PcGroup& G, const Matrix& M) {
  const std::size_t r = G.rank();
  if (M.rows() != r || M.cols() != r) throw Error(ErrorCode::DimensionMismatch, "lift matrix shape");
  if (M.determinant() == 0) throw Error(ErrorCode::NotInvertible, "lift of a singular matrix");
  Lift lift;
  for (std::size_t i = 0; i < r; ++i) {
    GroupElem g = G.identity(), z = G.identity();
    for (std::size_t k = 0; k < r; ++k) g.a[k] = z.b[k] = M(i, k);
    lift.map.g_images.push_back(g);
    lift.map.z_images.push_back(z);
  }
  lift.valid = satisfies_relations(G, lift.map);
  return lift;
}

struct CentralAudit {
  std::uint64_t candidates = 0;
  std::uint64_t count = 0;        // candidates that are automorphisms
  bool exhaustive = false;
  bool elementary_abelian = false;  // every alpha^p = 1 and the sample commutes
  bool closed = false;              // sampled compositions are central again
};

namespace detail {

inline GroupMap central_map(const PcGroup& G, const std::vector<std::uint32_t>& Z) {
  const std::size_t r = G.rank();
  GroupMap m;
  for (std::size_t i = 0; i < r; ++i) {
    GroupElem g = G.gen(i);
    for (std::size_t k = 0; k < r; ++k) g.b[k] = Z[i * r + k];
    m.g_images.push_back(g);
    m.z_images.push_back(G.central_gen(i));
  }
  return m;
}

inline GroupMap compose(const PcGroup& G, const GroupMap& first, const GroupMap& second) {
  GroupMap out;
  for (const auto& g : first.g_images) out.g_images.push_back(apply_map(G, second, g));
  for (const auto& z : first.z_images) out.z_images.push_back(apply_map(G, second, z));
  return out;
}

inline bool maps_equal(const GroupMap& x, const GroupMap& y) {
  return x.g_images == y.g_images && x.z_images == y.z_images;
}

inline bool is_central_map(const PcGroup& G, const GroupMap& m) {
  for (std::size_t i = 0; i < G.rank(); ++i) {
    if (m.g_images[i].a != G.gen(i).a) return false;
    if (!(m.z_images[i] == G.central_gen(i))) return false;
  }
  return true;
}

}  // namespace detail

/// Maps g_i -> g_i z^(Z_i) for r x r matrices Z over F_p: all of them when
/// p^(r^2) is within the cap, otherwise a fixed-seed sample of 1000.
inline CentralAudit central_automorphism_audit(const PcGroup& G, const Limits& limits = {},
                                               std::size_t commute_sample = 100) {
  const std::size_t r = G.rank();
  const std::uint32_t p = G.prime();
  const std::uint64_t total = checked_pow(p, r * r);
  CentralAudit audit;
  audit.exhaustive = total <= limits.central_maps;
  std::mt19937_64 rng(0x5eed);
  auto matrix_of = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> Z(r * r);
    for (auto& z : Z) {
      z = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return Z;
  };
  auto random_matrix = [&]() {
    std::vector<std::uint32_t> Z(r * r);
    for (auto& z : Z) z = static_cast<std::uint32_t>(rng() % p);
    return Z;
  };
  audit.candidates = audit.exhaustive ? total : 1000;

  std::vector<std::uint64_t> ok(std::max(1u, limits.jobs), 0);
  std::vector<char> order_p(std::max(1u, limits.jobs), 1);
  std::vector<std::vector<std::uint32_t>> sampled;
  if (!audit.exhaustive)
    for (std::uint64_t i = 0; i < audit.candidates; ++i) sampled.push_back(random_matrix());
  parallel_chunks(audit.candidates, limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto m = detail::central_map(G, audit.exhaustive ? matrix_of(idx) : sampled[idx]);
      if (!satisfies_relations(G, m)) continue;
      ++ok[w];
      GroupMap power = m;
      for (std::uint32_t t = 1; t < p; ++t) power = detail::compose(G, power, m);
      GroupMap id;
      for (std::size_t i = 0; i < r; ++i) {
        id.g_images.push_back(G.gen(i));
        id.z_images.push_back(G.central_gen(i));
      }
      if (!detail::maps_equal(power, id)) order_p[w] = 0;
    }
  });
  for (auto c : ok) audit.count += c;

  bool commute = true, closed = true;
  for (std::size_t s = 0; s < commute_sample; ++s) {
    const auto x = detail::central_map(G, random_matrix());
    const auto y = detail::central_map(G, random_matrix());
    const auto xy = detail::compose(G, x, y), yx = detail::compose(G, y, x);
    if (!detail::maps_equal(xy, yx)) commute = false;
    if (!detail::is_central_map(G, xy) || !satisfies_relations(G, xy)) closed = false;
  }
  audit.elementary_abelian = commute && std::all_of(order_p.begin(), order_p.end(), [](char c) { return c != 0; });
  audit.closed = closed;
  return audit;
}

struct AuditRow {
  Subspace subspace;
  bool is_subalgebra = false;
  bool powerful = false;
  bool is_ideal = false;
  bool powerfully_embedded = false;
  bool agrees() const { return is_subalgebra == powerful && is_ideal == powerfully_embedded; }
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::uint64_t proper_nonzero = 0;
  std::uint64_t subalgebras = 0;
  std::uint64_t ideals = 0;
  std::uint64_t proper_ideals = 0;  // proper and nonzero
  bool all_agree = true;
  bool restricted = false;  // only part of the lattice was audited
};

struct AuditOptions {
  // Dimension window audited in full; larger lattices default to dims <= 2,
  // >= r - 2 and all ideals from the semisimple decomposition.
  bool full_lattice = false;
  std::size_t full_lattice_max_rank = 5;
};

inline AuditReport correspondence_audit(const ACAlgebra& L, const PcGroup& G, const AuditOptions& opt = {},
                                        const Limits& limits = {}) {
  const std::size_t r = L.dim();
  const Field& f = L.field();
  if (G.rank() != r || G.prime() != f.characteristic())
    throw Error(ErrorCode::DimensionMismatch, "group and algebra do not match");
  if (checked_pow(f.order(), r) > 10'000 && opt.full_lattice)
    throw Error(ErrorCode::TooLargeForExhaustive, "subspace lattice too large");
  AuditReport rep;
  std::vector<Subspace> subs;
  if (opt.full_lattice || r <= opt.full_lattice_max_rank) {
    for_each_subspace(f, r, 0, r, [&](Subspace s) { subs.push_back(std::move(s)); });
  } else {
    rep.restricted = true;
    for_each_subspace(f, r, 0, std::min<std::size_t>(2, r), [&](Subspace s) { subs.push_back(std::move(s)); });
    for_each_subspace(f, r, r >= 2 ? r - 2 : 0, r, [&](Subspace s) {
      if (s.dim() > 2) subs.push_back(std::move(s));
    });
    if (!L.is_abelian() && center(L).is_zero())
      for (auto& I : semisimple_decompose(L, limits).ideals)
        if (I.dim() > 2 && I.dim() + 2 < r) subs.push_back(std::move(I));
  }
  for (auto& s : subs) {
    AuditRow row;
    const auto alg = subspace_tests(L, s);
    const auto grp = subgroup_tests(G, s, limits);
    row.is_subalgebra = alg.is_subalgebra;
    row.is_ideal = alg.is_ideal;
    row.powerful = grp.powerful;
    row.powerfully_embedded = grp.powerfully_embedded;
    const bool proper_nonzero = !s.is_zero() && !s.is_full();
    if (proper_nonzero) ++rep.proper_nonzero;
    if (row.is_subalgebra) ++rep.subalgebras;
    if (row.is_ideal) {
      ++rep.ideals;
      if (proper_nonzero) ++rep.proper_ideals;
    }
    if (!row.agrees()) rep.all_agree = false;
    row.subspace = std::move(s);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ucs
