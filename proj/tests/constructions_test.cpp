#include <gtest/gtest.h>

#include <chrono>

#include "ucsiac/esq.hpp"
#include "ucsiac/polymod.hpp"
#include "ucsiac/sec6.hpp"
#include "ucsiac/standard.hpp"

using namespace ucs;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

ModuleRep c5_module(const Field& f) { return deleted_perm_module({{1, 2, 3, 4, 0}}, 5, f); }

}  // namespace

TEST(Esq, C5OverF3) {
  const Field f = Field::make(3);
  const ModuleRep V = c5_module(f);
  EXPECT_EQ(hom_module_space(V.wedge(), V).size(), 4u);
  const auto s = esq_structures(V);
  EXPECT_EQ(s.size(), 80u);
  for (const auto& e : s) {
    EXPECT_EQ(e.psi.rank(), 4u);
    EXPECT_TRUE(is_intertwiner(e.psi, V.wedge(), V));
    EXPECT_TRUE(derived_subspace(e.algebra).is_full());
  }
}

TEST(Esq, AglOverF11) {
  const Field f = Field::make(11);
  const ModuleRep V = deleted_perm_module(agl_generators(5, false), 5, f);
  EXPECT_TRUE(is_irreducible(V));
  EXPECT_EQ(hom_module_space(V.wedge(), V).size(), 1u);
  const auto s = esq_structures(V);
  ASSERT_EQ(s.size(), 10u);
  for (const auto& e : s) EXPECT_TRUE(are_isomorphic(s.front().algebra, e.algebra));
}

TEST(Esq, V4OverF13HasNoStructure) {
  const Field f = Field::make(13);
  EXPECT_TRUE(esq_structures(vm_module(4, f, sl2_generators(f))).empty());
}

TEST(Esq, Errors) {
  const Field f = Field::make(3);
  EXPECT_EQ(code_of([&] { esq_structures(ModuleRep(f, 2, {Matrix::identity(f, 2)})); }), ErrorCode::ReducibleModule);
  EXPECT_EQ(code_of([&] { esq_structures(ModuleRep(f, 1, {Matrix::identity(f, 1)})); }), ErrorCode::InvalidArgument);
}

TEST(DeletedPerm, Examples) {
  EXPECT_TRUE(is_irreducible(c5_module(Field::make(3))));
  const Field f11 = Field::make(11);
  const std::vector<Permutation> agl{{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}};
  EXPECT_TRUE(is_irreducible(deleted_perm_module(agl, 5, f11)));
  EXPECT_TRUE(deleted_perm_module({{0, 1, 2, 3, 4}}, 5, f11).gens()[0].is_identity());
  EXPECT_EQ(code_of([&] { deleted_perm_module({{1, 2, 3, 4, 0}}, 5, Field::make(5)); }),
            ErrorCode::CharacteristicDividesT);
}

TEST(DeletedPerm, IsQuotientOfPermutationModule) {
  // Compare with the permutation action on F^5 modulo the all-ones line.
  const Field f = Field::make(7);
  for (const auto& s : agl_generators(5, false)) {
    const Matrix M = deleted_perm_module({s}, 5, f).gens()[0];
    for (std::size_t i = 0; i < 4; ++i) {
      Vec image(5, 0);  // x_{s(i)} - x_{s(4)}
      image[s[i]] = f.add(image[s[i]], 1);
      image[s[4]] = f.sub(image[s[4]], 1);
      // Coordinates of image on u_k = x_k - x_4: the first four entries.
      EXPECT_EQ(Vec(image.begin(), image.begin() + 4), M.row_vec(i));
    }
  }
}

TEST(Agl, Generators) {
  auto g5 = agl_generators(5, false);
  ASSERT_EQ(g5.size(), 2u);
  EXPECT_EQ(cycle_string(g5[0]), "(0 1 2 3 4)");
  EXPECT_EQ(cycle_string(g5[1]), "(1 2 4 3)");
  auto g7 = agl_generators(7, false);
  EXPECT_EQ(cycle_string(g7[0]), "(0 1 2 3 4 5 6)");
  EXPECT_EQ(cycle_string(g7[1]), "(1 3 2 6 4 5)");
  auto g9 = agl_generators(9, true);
  ASSERT_EQ(g9.size(), 3u);
  // Frobenius has order 2 and fixes the prime field {0, 1, 2}.
  for (std::size_t x = 0; x < 9; ++x) EXPECT_EQ(g9[2][g9[2][x]], x);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(g9[2][x], x);
  EXPECT_EQ(agl_generators(9, false).size(), 2u);
  EXPECT_EQ(code_of([] { agl_generators(6, false); }), ErrorCode::UnsupportedT);
  EXPECT_EQ(code_of([] { agl_generators(64, false); }), ErrorCode::UnsupportedT);
}

TEST(Census, F3MatchesBruteForceClassification) {
  const Field f = Field::make(3);
  // Classify all 80 structures by pairwise isomorphism, without orbit reduction.
  std::vector<ACAlgebra> reps;
  std::vector<std::uint64_t> sizes;
  for (const auto& s : esq_structures(c5_module(f))) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c)
      if (are_isomorphic(reps[c], s.algebra)) {
        ++sizes[c];
        placed = true;
      }
    if (!placed) {
      reps.push_back(s.algebra);
      sizes.push_back(1);
    }
  }
  const auto rep = dim4_census(3);
  ASSERT_EQ(rep.classes.size(), reps.size());
  EXPECT_EQ(rep.candidates, 80u);
  std::multiset<std::uint64_t> brute_sizes(sizes.begin(), sizes.end()), census_sizes;
  for (const auto& c : rep.classes) census_sizes.insert(c.orbit_size);
  EXPECT_EQ(brute_sizes, census_sizes);
}

TEST(Census, ClassCountsAndAutomorphismOrders) {
  const std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> expected{
      {3, {20, 5}}, {7, {20, 5}}, {9, {20}}, {11, {20}}, {13, {20, 5}}};
  for (const auto& [q, auts] : expected) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = dim4_census(q);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(secs, 60.0) << "q=" << q;
    std::vector<std::uint64_t> got;
    for (const auto& c : rep.classes) {
      got.push_back(c.aut_order);
      EXPECT_TRUE(is_simple(c.representative));
    }
    EXPECT_EQ(got, auts) << "q=" << q;
    const bool pm2 = q % 5 == 2 || q % 5 == 3;
    EXPECT_EQ(rep.module, pm2 ? "C5" : "AGL(1,5)");
    EXPECT_EQ(rep.cross_checked, pm2);
    EXPECT_TRUE(rep.cross_check_ok);
    std::uint64_t total = 0;
    for (const auto& c : rep.classes) total += c.orbit_size;
    EXPECT_EQ(total, rep.candidates);
  }
}

TEST(Census, AglClassIsTheStandardTable) {
  for (std::uint32_t q : {3u, 7u, 11u}) {
    const auto rep = dim4_census(q);
    EXPECT_TRUE(are_isomorphic(rep.classes.front().representative, th52b(Field::make(q)))) << "q=" << q;
  }
}

TEST(Census, PrintedTableIsNotInTheCensus) {
  // The verbatim integer table is simple but has only two automorphisms; see
  // the README for the discrepancy.
  const Field f = Field::make(3);
  const ACAlgebra printed = th52b_printed(f);
  EXPECT_TRUE(is_simple(printed));
  EXPECT_EQ(automorphism_count(printed), 2u);
  for (const auto& c : dim4_census(3).classes) EXPECT_FALSE(are_isomorphic(c.representative, printed));
}

TEST(Census, Errors) {
  EXPECT_EQ(code_of([] { dim4_census(5); }), ErrorCode::UnsupportedQ);
  EXPECT_EQ(code_of([] { dim4_census(25); }), ErrorCode::UnsupportedQ);
  EXPECT_EQ(code_of([] { dim4_census(17); }), ErrorCode::UnsupportedQ);
}

TEST(Sec6, Examples) {
  const auto a = family_sec6(2, 5, Field::make(11));
  EXPECT_EQ(a.r, 4u);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.algebra.dim(), 4u);

  const auto b = family_sec6(3, 11, Field::make(23));
  EXPECT_EQ(b.r, 5u);
  EXPECT_TRUE(b.ok());
  EXPECT_TRUE(is_simple(b.algebra));

  EXPECT_EQ(code_of([] { family_sec6(2, 4, Field::make(5)); }), ErrorCode::BadHypothesis);
  EXPECT_EQ(code_of([] { family_sec6(2, 5, Field::make(7)); }), ErrorCode::BadHypothesis);
}

TEST(Sec6, IndependentChecks) {
  const Field f = Field::make(11);
  const auto res = family_sec6(2, 5, f);
  const std::size_t r = res.r;
  EXPECT_TRUE(res.A.pow(r).is_identity());
  EXPECT_TRUE(res.B.pow(5).is_identity());
  // b^-1 = 2^3 = 8 mod 5 = 3.
  EXPECT_EQ(res.B * res.A, res.A * res.B.pow(3));
  EXPECT_TRUE(is_irreducible(ModuleRep(f, r, {res.A, res.B})));
  for (const Matrix& g : {res.A, res.B}) {
    const Matrix w = wedge_square(g);
    for (const Subspace& U : {res.U1, res.U2})
      for (const auto& v : U.basis_vectors()) EXPECT_TRUE(U.contains(w.apply(v)));
    EXPECT_TRUE(is_automorphism(res.algebra, g));
  }
  EXPECT_TRUE((res.U1 + res.U2).is_full());
  EXPECT_TRUE(res.U1.intersect(res.U2).is_zero());

  // Closed-form table for r = 4.
  const ACAlgebra expect = ACAlgebra::from_ints(
      f, 4, {{0, 1, {0, 0, 0, 1}}, {1, 2, {1, 0, 0, 0}}, {2, 3, {0, 1, 0, 0}}, {0, 3, {0, 0, -1, 0}}});
  EXPECT_EQ(res.algebra, expect);
}
