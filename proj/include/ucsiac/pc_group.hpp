#pragma once

// Groups of order p^(2r) given by the class-2 presentation
//   g_i^p = z_i, z_i^p = 1, [z_j, g_i] = 1, [z_i, z_j] = 1,
//   [g_i, g_j] = prod_k z_k^(c_k^(i,j))   (i < j).
// Elements are kept in the normal form g_1^a_1 ... g_r^a_r z_1^b_1 ... z_r^b_r.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ucsiac/algebra.hpp"
#include "ucsiac/limits.hpp"
#include "ucsiac/subspace.hpp"

namespace ucs {

struct GroupElem {
  std::vector<std::uint32_t> a;  // exponents of g_i
  std::vector<std::uint32_t> b;  // exponents of z_i
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

class PcGroup {
 public:
  PcGroup() = default;

  /// Commutator exponents: c[pair_index(i, j, r)][k] = c_k^(i,j) in 0..p-1.
  static PcGroup from_table(std::uint32_t p, std::size_t r, const std::vector<std::vector<std::uint32_t>>& c) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::NotPrimeField, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorCode::EvenPrime, "the presentation needs an odd prime");
    if (c.size() != wedge_dim(r)) throw Error(ErrorCode::DimensionMismatch, "commutator table size");
    PcGroup G;
    G.p_ = p;
    G.r_ = r;
    G.c_.assign(wedge_dim(r) * r, 0);
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t].size() != r) throw Error(ErrorCode::DimensionMismatch, "commutator exponent vector length");
      for (std::size_t k = 0; k < r; ++k) G.c_[t * r + k] = c[t][k] % p;
    }
    G.verify_or_throw();
    return G;
  }

  static PcGroup from_algebra(const ACAlgebra& L) {
    const Field& f = L.field();
    if (!f.is_prime_field()) throw Error(ErrorCode::NotPrimeField, "algebra over " + f.name());
    std::vector<std::vector<std::uint32_t>> c;
    for (const auto& row : L.tensor().row_list()) c.emplace_back(row.begin(), row.end());
    return from_table(f.characteristic(), L.dim(), c);
  }

  std::uint32_t prime() const { return p_; }
  std::size_t rank() const { return r_; }
  std::uint64_t order() const { return checked_pow(p_, 2 * r_); }

  /// c_k^(i,j) for i < j, as stored.
  std::vector<std::uint32_t> commutator_exponents(std::size_t i, std::size_t j) const {
    const std::size_t t = pair_index(i, j, r_);
    return {c_.begin() + static_cast<std::ptrdiff_t>(t * r_), c_.begin() + static_cast<std::ptrdiff_t>((t + 1) * r_)};
  }

  GroupElem identity() const { return {std::vector<std::uint32_t>(r_, 0), std::vector<std::uint32_t>(r_, 0)}; }

  GroupElem gen(std::size_t i) const {
    GroupElem u = identity();
    u.a[i] = 1;
    return u;
  }

  GroupElem central_gen(std::size_t i) const {
    GroupElem u = identity();
    u.b[i] = 1;
    return u;
  }

  GroupElem mul(const GroupElem& x, const GroupElem& y) const {
    GroupElem out = identity();
    // Moving g_i^(y_i) left past g_j^(x_j), j > i, leaves [g_j, g_i]^(x_j y_i).
    std::vector<std::uint64_t> delta(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (y.a[i] == 0) continue;
      for (std::size_t j = i + 1; j < r_; ++j) {
        if (x.a[j] == 0) continue;
        const std::uint64_t w = static_cast<std::uint64_t>(x.a[j]) * y.a[i] % p_;
        const std::uint32_t* cv = &c_[pair_index(i, j, r_) * r_];
        for (std::size_t k = 0; k < r_; ++k) delta[k] += w * cv[k];
      }
    }
    for (std::size_t k = 0; k < r_; ++k) {
      const std::uint32_t s = x.a[k] + y.a[k];
      const std::uint32_t carry = s >= p_ ? 1 : 0;
      out.a[k] = s - carry * p_;
      const std::uint64_t neg = (p_ - delta[k] % p_) % p_;
      out.b[k] = static_cast<std::uint32_t>((x.b[k] + y.b[k] + carry + neg) % p_);
    }
    return out;
  }

  GroupElem inv(const GroupElem& x) const {
    GroupElem out = identity();
    for (std::size_t k = 0; k < r_; ++k) out.a[k] = (p_ - x.a[k]) % p_;
    std::vector<std::uint64_t> delta(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (out.a[i] == 0) continue;
      for (std::size_t j = i + 1; j < r_; ++j) {
        if (x.a[j] == 0) continue;
        const std::uint64_t w = static_cast<std::uint64_t>(x.a[j]) * out.a[i] % p_;
        const std::uint32_t* cv = &c_[pair_index(i, j, r_) * r_];
        for (std::size_t k = 0; k < r_; ++k) delta[k] += w * cv[k];
      }
    }
    for (std::size_t k = 0; k < r_; ++k) {
      const std::uint32_t carry = x.a[k] != 0 ? 1 : 0;
      out.b[k] = static_cast<std::uint32_t>((2 * static_cast<std::uint64_t>(p_) - x.b[k] - carry + delta[k]) % p_);
    }
    return out;
  }

  GroupElem pow(const GroupElem& x, std::int64_t n) const {
    GroupElem base = n < 0 ? inv(x) : x;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    GroupElem out = identity();
    while (e > 0) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }

  /// x^-1 y^-1 x y
  GroupElem comm(const GroupElem& x, const GroupElem& y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  bool is_central_form(const GroupElem& x) const {
    for (auto v : x.a)
      if (v != 0) return false;
    return true;
  }

  /// x^p in closed form: (a, b) -> (0, a).
  GroupElem p_power(const GroupElem& x) const { return {std::vector<std::uint32_t>(r_, 0), x.a}; }

  /// The element whose p-th power is the central element h.
  GroupElem p_root(const GroupElem& h) const {
    if (!is_central_form(h)) throw Error(ErrorCode::NotCentral, "p-th root of an element outside Phi(G)");
    return {h.b, std::vector<std::uint32_t>(r_, 0)};
  }

  /// Element number idx: a-digits first (base p), then b-digits.
  GroupElem element(std::uint64_t idx) const {
    GroupElem u = identity();
    for (std::size_t k = 0; k < r_; ++k) {
      u.a[k] = static_cast<std::uint32_t>(idx % p_);
      idx /= p_;
    }
    for (std::size_t k = 0; k < r_; ++k) {
      u.b[k] = static_cast<std::uint32_t>(idx % p_);
      idx /= p_;
    }
    return u;
  }

  /// Relations of the presentation checked against the multiplication.
  std::vector<std::string> presentation_violations() const {
    std::vector<std::string> bad;
    const GroupElem e = identity();
    for (std::size_t i = 0; i < r_; ++i) {
      const std::string gi = "g" + std::to_string(i + 1), zi = "z" + std::to_string(i + 1);
      if (!(pow(gen(i), p_) == central_gen(i))) bad.push_back(gi + "^p = " + zi);
      if (!(pow(central_gen(i), p_) == e)) bad.push_back(zi + "^p = 1");
      for (std::size_t j = 0; j < r_; ++j) {
        if (!(comm(central_gen(j), gen(i)) == e)) bad.push_back("[z" + std::to_string(j + 1) + "," + gi + "] = 1");
        if (!(comm(central_gen(i), central_gen(j)) == e)) bad.push_back("[" + zi + ",z" + std::to_string(j + 1) + "] = 1");
      }
      for (std::size_t j = i + 1; j < r_; ++j) {
        GroupElem rhs = e;
        rhs.b = commutator_exponents(i, j);
        if (!(comm(gen(i), gen(j)) == rhs)) bad.push_back("[" + gi + ",g" + std::to_string(j + 1) + "]");
      }
    }
    return bad;
  }

  /// Text presentation, one relation per line.
  std::string pc_presentation() const {
    std::ostringstream out;
    for (std::size_t i = 1; i <= r_; ++i) out << "g" << i << "^" << p_ << " = z" << i << "\n";
    for (std::size_t i = 1; i <= r_; ++i) out << "z" << i << "^" << p_ << " = 1\n";
    for (std::size_t i = 1; i <= r_; ++i)
      for (std::size_t j = 1; j <= r_; ++j) out << "[z" << j << ",g" << i << "] = 1\n";
    for (std::size_t i = 1; i <= r_; ++i)
      for (std::size_t j = i + 1; j <= r_; ++j) out << "[z" << i << ",z" << j << "] = 1\n";
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i + 1; j < r_; ++j) {
        out << "[g" << i + 1 << ",g" << j + 1 << "] =";
        const auto c = commutator_exponents(i, j);
        for (std::size_t k = 0; k < r_; ++k) out << " z" << k + 1 << "^" << c[k];
        out << "\n";
      }
    return out.str();
  }

  friend bool operator==(const PcGroup& x, const PcGroup& y) { return x.p_ == y.p_ && x.r_ == y.r_ && x.c_ == y.c_; }

 private:
  void verify_or_throw() const {
    const auto bad = presentation_violations();
    if (!bad.empty()) throw Error(ErrorCode::InconsistentPresentation, "relation fails: " + bad.front());
  }

  std::uint32_t p_ = 0;
  std::size_t r_ = 0;
  std::vector<std::uint32_t> c_;
};

inline Vec to_vec(const std::vector<std::uint32_t>& v) { return Vec(v.begin(), v.end()); }

/// Direct product of k copies; generators of copy t are numbered t*r .. t*r + r - 1.
inline PcGroup direct_power(const PcGroup& G, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "direct power needs k >= 1");
  const std::size_t r = G.rank(), R = r * k;
  std::vector<std::vector<std::uint32_t>> c(wedge_dim(R), std::vector<std::uint32_t>(R, 0));
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        const auto v = G.commutator_exponents(i, j);
        auto& row = c[pair_index(t * r + i, t * r + j, R)];
        for (std::size_t m = 0; m < r; ++m) row[t * r + m] = v[m];
      }
  return PcGroup::from_table(G.prime(), R, c);
}

struct CenterInfo {
  Subspace quotient_part;  // images in G/Phi(G) of central elements
  Subspace phi_part;       // z-exponents of central elements with a = 0
  std::uint64_t order = 0;
};

struct Lemma1Flags {
  bool derived_is_frattini = false;
  bool frattini_is_center = false;
  bool center_is_N = false;  // Z(G) = {(0, b)}
  bool quotient_elementary = false;
  bool frattini_elementary = false;
  bool all() const {
    return derived_is_frattini && frattini_is_center && center_is_N && quotient_elementary && frattini_elementary;
  }
};

struct GroupInvariants {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  Subspace derived;   // z-exponents spanning G'
  Subspace frattini;  // z-exponents spanning Phi(G) = G^p G'
  CenterInfo center;
  Lemma1Flags lemma1;
};

inline std::uint64_t element_order(const PcGroup& G, const GroupElem& u) {
  const GroupElem e = G.identity();
  if (u == e) return 1;
  const GroupElem up = G.pow(u, G.prime());
  return up == e ? G.prime() : static_cast<std::uint64_t>(G.prime()) * G.prime();
}

inline GroupInvariants group_invariants(const PcGroup& G, const Limits& limits = {}) {
  const std::uint64_t n = G.order();
  if (n > limits.group_elements)
    throw Error(ErrorCode::TooLargeForExhaustive, std::to_string(n) + " elements exceed the cap");
  const Field f = Field::make(G.prime());
  const std::size_t r = G.rank();
  GroupInvariants inv;
  inv.order = n;

  EchelonBasis derived(f, r), frattini(f, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const GroupElem c = G.comm(G.gen(i), G.gen(j));
      derived.insert(to_vec(c.b));
      frattini.insert(to_vec(c.b));
    }
  for (std::size_t i = 0; i < r; ++i) frattini.insert(to_vec(G.pow(G.gen(i), G.prime()).b));
  inv.derived = derived.to_subspace();
  inv.frattini = frattini.to_subspace();

  // Exhaustive pass: element orders and the center.
  std::vector<GroupElem> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(G.gen(i));
  std::vector<std::uint64_t> worker_exp(std::max(1u, limits.jobs), 1);
  std::vector<std::vector<GroupElem>> worker_center(std::max(1u, limits.jobs));
  parallel_chunks(n, limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const GroupElem u = G.element(idx);
      worker_exp[w] = std::max(worker_exp[w], element_order(G, u));
      bool central = true;
      for (const auto& g : gens)
        if (!(G.mul(u, g) == G.mul(g, u))) {
          central = false;
          break;
        }
      if (central) worker_center[w].push_back(u);
    }
  });
  inv.exponent = *std::max_element(worker_exp.begin(), worker_exp.end());
  EchelonBasis qpart(f, r), ppart(f, r);
  std::uint64_t center_order = 0;
  for (const auto& block : worker_center)
    for (const auto& u : block) {
      ++center_order;
      qpart.insert(to_vec(u.a));
      if (G.is_central_form(u)) ppart.insert(to_vec(u.b));
    }
  inv.center = {qpart.to_subspace(), ppart.to_subspace(), center_order};

  const Subspace full = Subspace::full(f, r);
  inv.lemma1.derived_is_frattini = inv.derived == inv.frattini;
  inv.lemma1.center_is_N = inv.center.quotient_part.is_zero() && inv.center.phi_part == full;
  inv.lemma1.frattini_is_center = inv.lemma1.center_is_N && inv.frattini == full;
  inv.lemma1.quotient_elementary = true;
  for (std::size_t i = 0; i < r; ++i)
    if (!G.is_central_form(G.pow(G.gen(i), G.prime()))) inv.lemma1.quotient_elementary = false;
  inv.lemma1.frattini_elementary = true;
  for (std::size_t i = 0; i < r; ++i)
    if (!(G.pow(G.central_gen(i), G.prime()) == G.identity())) inv.lemma1.frattini_elementary = false;
  return inv;
}

struct SubgroupFlags {
  bool powerful = false;
  bool powerfully_embedded = false;
  bool exhaustive = false;  // element pairs enumerated (otherwise generator level)
};

/// H = preimage of S in G, i.e. {(a, b) : a in S}. Decides H' <= H^p and
/// [H, G] <= H^p from group arithmetic alone.
inline SubgroupFlags subgroup_tests(const PcGroup& G, const Subspace& S, const Limits& limits = {}) {
  const std::size_t r = G.rank();
  if (S.ambient_dim() != r) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  const Field& f = S.field();
  const std::uint32_t p = G.prime();
  const std::uint64_t h_order = checked_pow(p, S.dim() + r);
  const std::uint64_t g_order = G.order();

  // Elements of H: combination index over the basis of S, then b digits.
  const auto basis = S.basis_vectors();
  auto h_element = [&](std::uint64_t idx) {
    Vec a(r, 0);
    for (const auto& v : basis) {
      vec::axpy(f, static_cast<Scalar>(idx % p), v, a);
      idx /= p;
    }
    GroupElem u = G.identity();
    u.a.assign(a.begin(), a.end());
    for (std::size_t k = 0; k < r; ++k) {
      u.b[k] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return u;
  };
  auto central_part = [&](const GroupElem& u) {
    if (!G.is_central_form(u)) throw Error(ErrorCode::NotCentral, "commutator outside Phi(G)");
    return to_vec(u.b);
  };

  SubgroupFlags out;
  EchelonBasis hp(f, r), hh(f, r), hg(f, r);
  const bool pairs_ok = h_order <= limits.element_pairs / std::max<std::uint64_t>(1, h_order) &&
                        h_order <= limits.element_pairs / std::max<std::uint64_t>(1, g_order);
  if (pairs_ok) {
    out.exhaustive = true;
    std::vector<GroupElem> H;
    for (std::uint64_t i = 0; i < h_order; ++i) H.push_back(h_element(i));
    for (const auto& x : H) hp.insert(central_part(G.pow(x, p)));
    for (std::size_t i = 0; i < H.size() && hh.dim() < r; ++i)
      for (std::size_t j = i + 1; j < H.size(); ++j) hh.insert(central_part(G.comm(H[i], H[j])));
    for (std::size_t i = 0; i < H.size() && hg.dim() < r; ++i)
      for (std::uint64_t j = 0; j < g_order; ++j) hg.insert(central_part(G.comm(H[i], G.element(j))));
  } else {
    // Class 2: commutators are bilinear and p-th powers multiplicative, so
    // generators of H and G suffice.
    std::vector<GroupElem> hgens;
    for (const auto& v : basis) {
      GroupElem u = G.identity();
      u.a.assign(v.begin(), v.end());
      hgens.push_back(u);
    }
    for (std::size_t k = 0; k < r; ++k) hgens.push_back(G.central_gen(k));
    for (const auto& x : hgens) hp.insert(central_part(G.pow(x, p)));
    for (std::size_t i = 0; i < hgens.size(); ++i)
      for (std::size_t j = i + 1; j < hgens.size(); ++j) hh.insert(central_part(G.comm(hgens[i], hgens[j])));
    for (const auto& x : hgens) {
      for (std::size_t k = 0; k < r; ++k) {
        hg.insert(central_part(G.comm(x, G.gen(k))));
        hg.insert(central_part(G.comm(x, G.central_gen(k))));
      }
    }
  }
  const Subspace Hp = hp.to_subspace();
  out.powerful = hh.to_subspace().is_subspace_of(Hp);
  out.powerfully_embedded = hg.to_subspace().is_subspace_of(Hp);
  return out;
}

}  // namespace ucs
