#pragma once

// Isomorphism search between anti-commutative algebras. A small generating set
// S of L1 is fixed; every isomorphism is determined by the images of S, so we
// enumerate image tuples (filtered by similarity invariants of the right
// multiplication maps), rebuild the induced linear map from product words and
// keep the ones that respect all basis products.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <vector>

#include "ucsiac/algebra.hpp"

namespace ucs {

enum class SearchMode { FindOne, CountAll, CollectAll };

struct IsoResult {
  std::optional<Matrix> first;  // least isomorphism in enumeration order
  std::uint64_t count = 0;      // number found (FindOne stops at 1)
  std::vector<Matrix> all;      // CollectAll only, in enumeration order
};

/// Conjugation invariant of x -> <x, v>: rank and characteristic polynomial.
struct VecKey {
  std::size_t rank = 0;
  Vec charpoly;
  friend bool operator==(const VecKey&, const VecKey&) = default;
};

inline VecKey vec_key(const ACAlgebra& L, std::span<const Scalar> v) {
  const Matrix R = L.right_mult(v);
  return {R.rank(), charpoly(R)};
}

namespace detail {

/// Words in the generators whose values form a basis of L1.
struct WordPlan {
  struct Step {
    bool is_gen = true;
    std::size_t a = 0;  // generator index, or left factor
    std::size_t b = 0;  // right factor
  };
  std::vector<Step> steps;
  Matrix basis_inv;  // inverse of the matrix of word values in L1
};

inline WordPlan make_word_plan(const ACAlgebra& L, const std::vector<Vec>& S) {
  WordPlan plan;
  EchelonBasis basis(L.field(), L.dim());
  std::vector<Vec> values;
  for (std::size_t t = 0; t < S.size(); ++t)
    if (basis.insert(S[t])) {
      plan.steps.push_back({true, t, 0});
      values.push_back(S[t]);
    }
  for (std::size_t j = 0; j < values.size() && !basis.full(); ++j)
    for (std::size_t i = 0; i < j && !basis.full(); ++i) {
      Vec p = L.product(values[i], values[j]);
      if (basis.insert(p)) {
        plan.steps.push_back({false, i, j});
        values.push_back(std::move(p));
      }
    }
  if (!basis.full()) throw Error(ErrorCode::NoSmallGeneratingSet, "set does not generate the algebra");
  plan.basis_inv = Matrix::from_rows(L.field(), L.dim(), values).inverse();
  return plan;
}

inline std::optional<Matrix> eval_plan(const WordPlan& plan, const ACAlgebra& L2, const std::vector<Vec>& images) {
  std::vector<Vec> values;
  values.reserve(plan.steps.size());
  for (const auto& s : plan.steps) values.push_back(s.is_gen ? images[s.a] : L2.product(values[s.a], values[s.b]));
  Matrix T2 = Matrix::from_rows(L2.field(), L2.dim(), values);
  if (T2.determinant() == 0) return std::nullopt;
  return plan.basis_inv * T2;
}

}  // namespace detail

inline IsoResult isomorphism_search(const ACAlgebra& L1, const ACAlgebra& L2, SearchMode mode,
                                    const Limits& limits = {}) {
  require_same_field(L1.field(), L2.field());
  IsoResult res;
  if (L1.dim() != L2.dim()) return res;
  const Field& f = L1.field();
  const std::size_t r = L1.dim();
  const std::uint32_t q = f.order();

  auto S = small_generating_set(L1, limits);
  if (!S) throw Error(ErrorCode::NoSmallGeneratingSet, "no generating set of size <= 3 found");
  const std::size_t s = S->size();
  const std::uint64_t space = checked_pow(q, r * s);
  if (space > limits.search_space)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(q) + "^" + std::to_string(r * s) + " exceeds " + std::to_string(limits.search_space));
  const detail::WordPlan plan = detail::make_word_plan(L1, *S);

  // Candidate images per generator, in increasing vector index.
  const std::uint64_t nvec = checked_pow(q, r);
  std::vector<VecKey> gen_keys;
  for (const auto& g : *S) gen_keys.push_back(vec_key(L1, g));
  std::vector<std::vector<Vec>> cand(s);
  for (std::uint64_t idx = 1; idx < nvec; ++idx) {
    const Vec w = vec::from_index(idx, r, q);
    const VecKey k = vec_key(L2, w);
    for (std::size_t t = 0; t < s; ++t)
      if (k == gen_keys[t]) cand[t].push_back(w);
  }
  for (const auto& c : cand)
    if (c.empty()) return res;

  // Keys of sums and products of generator pairs, checked as soon as both are chosen.
  std::vector<std::vector<VecKey>> sum_key(s, std::vector<VecKey>(s)), prod_key(s, std::vector<VecKey>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      sum_key[a][b] = vec_key(L1, vec::add(f, (*S)[a], (*S)[b]));
      prod_key[a][b] = vec_key(L1, L1.product((*S)[b], (*S)[a]));
    }

  std::atomic<std::uint64_t> best{UINT64_MAX};  // FindOne: least first-candidate index with a hit
  std::atomic<std::uint64_t> total{0};
  std::mutex out_mutex;
  std::vector<std::pair<std::uint64_t, std::vector<Matrix>>> collected;
  std::vector<std::pair<std::uint64_t, Matrix>> firsts;

  parallel_chunks(cand[0].size(), limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::vector<Vec> images(s);
    std::uint64_t local_count = 0;
    std::vector<Matrix> local_all;
    std::optional<Matrix> local_first;
    std::uint64_t first_at = UINT64_MAX;

    // Depth-first over generator images; returns true to stop.
    auto recurse = [&](auto&& self, std::size_t depth, std::uint64_t top) -> bool {
      if (depth == s) {
        auto phi = detail::eval_plan(plan, L2, images);
        if (!phi || !is_homomorphism(L1, L2, *phi)) return false;
        ++local_count;
        if (mode == SearchMode::CollectAll) local_all.push_back(*phi);
        if (mode == SearchMode::FindOne) {
          local_first = std::move(*phi);
          first_at = top;
          return true;
        }
        return false;
      }
      for (const auto& w : cand[depth]) {
        images[depth] = w;
        bool ok = true;
        for (std::size_t b = 0; b < depth && ok; ++b)
          ok = vec_key(L2, vec::add(f, w, images[b])) == sum_key[depth][b] &&
               vec_key(L2, L2.product(images[b], w)) == prod_key[depth][b];
        if (ok && self(self, depth + 1, top)) return true;
      }
      return false;
    };

    for (std::uint64_t i = begin; i < end; ++i) {
      if (mode == SearchMode::FindOne && i > best.load()) break;
      images[0] = cand[0][i];
      if (recurse(recurse, 1, i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {}
        break;
      }
    }
    total += local_count;
    std::lock_guard lock(out_mutex);
    if (local_first) firsts.emplace_back(first_at, std::move(*local_first));
    if (!local_all.empty()) collected.emplace_back(begin, std::move(local_all));
  });

  res.count = total.load();
  if (!firsts.empty()) {
    std::sort(firsts.begin(), firsts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    res.first = firsts.front().second;
    res.count = 1;
  }
  if (mode == SearchMode::CollectAll) {
    std::sort(collected.begin(), collected.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [_, block] : collected)
      for (auto& m : block) res.all.push_back(std::move(m));
    if (!res.all.empty()) res.first = res.all.front();
  }
  return res;
}

inline std::optional<Matrix> find_isomorphism(const ACAlgebra& L1, const ACAlgebra& L2, const Limits& limits = {}) {
  return isomorphism_search(L1, L2, SearchMode::FindOne, limits).first;
}

inline bool are_isomorphic(const ACAlgebra& L1, const ACAlgebra& L2, const Limits& limits = {}) {
  return find_isomorphism(L1, L2, limits).has_value();
}

inline std::uint64_t automorphism_count(const ACAlgebra& L, const Limits& limits = {}) {
  return isomorphism_search(L, L, SearchMode::CountAll, limits).count;
}

inline std::vector<Matrix> automorphisms(const ACAlgebra& L, const Limits& limits = {}) {
  return isomorphism_search(L, L, SearchMode::CollectAll, limits).all;
}

}  // namespace ucs
