#include <gtest/gtest.h>

#include <random>

#include "ucsiac/esq.hpp"
#include "ucsiac/polymod.hpp"
#include "ucsiac/sec6.hpp"

using namespace ucs;

namespace {

// C5 acting on {u_0..u_4} by i -> i+1, written on the basis u_i - u_4 by hand.
ModuleRep c5_deleted_by_hand(const Field& f) {
  Matrix g(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    // (u_i - u_4) -> u_{i+1} - u_0
    const std::size_t a = (i + 1) % 5;
    if (a < 4) g(i, a) = f.add(g(i, a), 1);
    g(i, 0) = f.sub(g(i, 0), 1);
  }
  return ModuleRep(f, 4, {g});
}

ModuleRep sec6_module(std::size_t r, std::uint32_t q, std::uint32_t b, std::uint32_t n) {
  const Field f = Field::make(q);
  const auto res = family_sec6(b, n, f);
  EXPECT_EQ(res.r, r);
  return ModuleRep(f, r, {res.A, res.B});
}

}  // namespace

TEST(Spin, Examples) {
  const Field f = Field::make(11);
  const Subspace s = spin({{1, 0, 0, 0}}, ModuleRep(f, 4, {Matrix::identity(f, 4)}));
  EXPECT_EQ(s, Subspace::span(f, 4, {{1, 0, 0, 0}}));

  const ModuleRep V = sec6_module(4, 11, 2, 5);
  EXPECT_TRUE(spin({{1, 0, 0, 0}}, ModuleRep(f, 4, {V.gens()[0]})).is_full());

  // U1 from the span definition: e_i ^ e_{i+1} (indices mod 4).
  std::vector<Vec> u1;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    Vec v(6, 0);
    v[pair_index(std::min(i, j), std::max(i, j), 4)] = 1;
    u1.push_back(v);
  }
  Vec seed(6, 0);
  seed[pair_index(0, 1, 4)] = 1;
  const Subspace s1 = spin({seed}, V.wedge());
  EXPECT_EQ(s1.dim(), 4u);
  EXPECT_EQ(s1, Subspace::span(f, 6, u1));
}

TEST(Irreducible, Examples) {
  const Field f3 = Field::make(3);
  EXPECT_FALSE(is_irreducible(ModuleRep(f3, 2, {Matrix::identity(f3, 2)})));
  EXPECT_TRUE(is_irreducible(sec6_module(4, 11, 2, 5)));

  const Field f5 = Field::make(5);
  const ModuleRep bad = c5_deleted_by_hand(f5);
  const auto rep = irreducibility(f5, 4, bad.gens());
  EXPECT_FALSE(rep.irreducible);
  ASSERT_TRUE(rep.witness.has_value());
  // The all-ones vector on this basis is sum_i u_i - 5 u_4 = sum_i u_i.
  const Vec ones{1, 1, 1, 1};
  EXPECT_EQ(spin({ones}, bad).dim(), 1u);
  EXPECT_EQ(bad.gens()[0].apply(ones), ones);

  // The library's deleted permutation module agrees with the hand-built one where defined.
  EXPECT_EQ(deleted_perm_module({{1, 2, 3, 4, 0}}, 5, f3).gens()[0], c5_deleted_by_hand(f3).gens()[0]);
  EXPECT_TRUE(is_irreducible(c5_deleted_by_hand(f3)));
}

TEST(Irreducible, WitnessIsInvariantAndProper) {
  const Field f = Field::make(3);
  const ModuleRep V = vm_module(1, f, sl2_generators(f)).tensor(vm_module(1, f, sl2_generators(f)));
  const auto rep = irreducibility(f, V.dim(), V.gens());
  ASSERT_FALSE(rep.irreducible);
  const Subspace w = *rep.witness;
  EXPECT_GT(w.dim(), 0u);
  EXPECT_LT(w.dim(), V.dim());
  for (const auto& g : V.gens()) EXPECT_EQ(spin(f, V.dim(), w.basis_vectors(), {g}), w);
}

TEST(Irreducible, TooLargeWithoutFullEnvelope) {
  const Field f = Field::make(13);
  Limits tight;
  tight.projective_points = 10;
  try {
    (void)is_irreducible(ModuleRep(f, 3, {Matrix::identity(f, 3)}), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForExhaustive);
  }
  // A full enveloping algebra still certifies irreducibility past the cap.
  EXPECT_TRUE(is_irreducible(sec6_module(4, 11, 2, 5), tight));
}

TEST(Hom, Examples) {
  const Field f3 = Field::make(3);
  const ModuleRep c5 = deleted_perm_module({{1, 2, 3, 4, 0}}, 5, f3);
  const auto endo = hom_module_space(c5, c5);
  EXPECT_EQ(endo.size(), 4u);
  // Endomorphism ring is a field: every nonzero element is invertible.
  for (std::uint64_t idx = 1; idx < 81; ++idx) EXPECT_NE(combination(endo, idx).determinant(), 0u);

  const ModuleRep id2(f3, 2, {Matrix::identity(f3, 2)});
  EXPECT_EQ(hom_module_space(id2, id2).size(), 4u);

  const Field f7 = Field::make(7);
  const auto gens = sl2_generators(f7);
  for (std::size_t m = 1; m <= 4; ++m) {
    const ModuleRep Vm = vm_module(m, f7, gens);
    std::vector<Matrix> triv(gens.size(), Matrix::identity(f7, 1));
    EXPECT_TRUE(hom_module_space(Vm, ModuleRep(f7, 1, triv)).empty()) << "m=" << m;
  }

  try {
    hom_module_space(id2, ModuleRep(f3, 2, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GeneratorCountMismatch);
  }
}

TEST(Hom, CountMatchesBruteForce) {
  // Enumerate all 3^4 maps F_3^2 -> F_3^2 and count intertwiners.
  const Field f = Field::make(3);
  const std::vector<Matrix> gens{Matrix::from_ints(f, {{1, 1}, {0, 1}})};
  const ModuleRep V(f, 2, gens);
  const auto basis = hom_module_space(V, V);
  std::uint64_t brute = 0;
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    Matrix psi(f, 2, 2);
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < 4; ++i, t /= 3) psi(i / 2, i % 2) = static_cast<Scalar>(t % 3);
    brute += is_intertwiner(psi, V, V);
  }
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) expect *= 3;
  EXPECT_EQ(brute, expect);
  for (const auto& psi : basis) EXPECT_TRUE(is_intertwiner(psi, V, V));
}

TEST(ModuleRep, RejectsSingularGenerators) {
  const Field f = Field::make(5);
  EXPECT_THROW(ModuleRep(f, 2, {Matrix(f, 2, 2)}), Error);
  EXPECT_THROW(ModuleRep(f, 3, {Matrix::identity(f, 2)}), Error);
}
