#include <gtest/gtest.h>

#include <random>

#include "ucsiac/subspace.hpp"

using namespace ucs;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<Scalar> d(0, f.order() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion, used as an oracle for 2x2 minors and determinants.
Scalar leibniz_det(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Rref, Examples) {
  const Field f5 = Field::make(5);
  auto id = rref_solve(Matrix::identity(f5, 3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_TRUE(id.kernel.empty());

  const Field f3 = Field::make(3);
  auto z = rref_solve(Matrix(f3, 2, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.kernel.size(), 2u);

  const Matrix M = Matrix::from_ints(f5, {{1, 2}, {2, 4}});
  const Matrix rhs = Matrix::from_ints(f5, {{1}, {2}});
  auto r = rref_solve(M, &rhs);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.kernel.size(), 1u);
  EXPECT_EQ(r.kernel[0], (Vec{3, 1}));
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(M * *r.solution, rhs);

  const Matrix bad = Matrix::from_ints(f5, {{1}, {3}});
  EXPECT_FALSE(rref_solve(M, &bad).consistent);
}

TEST(Rref, IdempotentAndRankOfTranspose) {
  std::mt19937_64 rng(1);
  for (std::uint64_t q : {3u, 5u, 9u, 13u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 50; ++t) {
      const Matrix m = random_matrix(f, 1 + t % 5, 1 + (t / 5) % 6, rng);
      const auto r1 = rref_solve(m);
      EXPECT_EQ(rref_solve(r1.rref).rref, r1.rref);
      EXPECT_EQ(m.rank(), m.transpose().rank());
      for (const auto& k : r1.kernel) EXPECT_TRUE(vec::is_zero(m.transpose().apply(k)));
      EXPECT_EQ(r1.rank + r1.kernel.size(), m.cols());
    }
  }
}

TEST(Matrix, InverseAndDeterminant) {
  std::mt19937_64 rng(2);
  const Field f = Field::make(7);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_matrix(f, 4, 4, rng);
    EXPECT_EQ(m.determinant(), leibniz_det(m));
    if (m.determinant() != 0) {
      EXPECT_TRUE((m * m.inverse()).is_identity());
    } else {
      EXPECT_THROW(m.inverse(), Error);
    }
  }
}

TEST(Wedge, Examples) {
  const Field f5 = Field::make(5);
  EXPECT_TRUE(wedge_square(Matrix::identity(f5, 4)).is_identity());
  const Matrix m2 = Matrix::from_ints(f5, {{1, 2}, {3, 4}});
  const Matrix w2 = wedge_square(m2);
  ASSERT_EQ(w2.rows(), 1u);
  EXPECT_EQ(w2(0, 0), m2.determinant());
  EXPECT_THROW(wedge_square(Matrix(f5, 2, 3)), Error);

  // (0 1 2): e0 -> e1 -> e2 -> e0.
  const Matrix P = Matrix::from_ints(f5, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const Matrix W = wedge_square(P);
  // e0^e1 -> e1^e2, e0^e2 -> e1^e0 = -e0^e1, e1^e2 -> e2^e0 = -e0^e2.
  EXPECT_EQ(W, Matrix::from_ints(f5, {{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}));
  EXPECT_EQ(wedge_square(P * P), W * W);
}

TEST(Wedge, EntriesAreTwoByTwoMinors) {
  std::mt19937_64 rng(3);
  const Field f = Field::make(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 4;
    const Matrix M = random_matrix(f, d, d, rng);
    const Matrix W = wedge_square(M);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = k + 1; l < d; ++l) {
            const Matrix minor = Matrix::from_rows(f, 2, {{M(i, k), M(i, l)}, {M(j, k), M(j, l)}});
            EXPECT_EQ(W(pair_index(i, j, d), pair_index(k, l, d)), leibniz_det(minor));
          }
  }
}

TEST(Wedge, PairIndexIsLexicographic) {
  std::size_t expect = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_EQ(pair_index(i, j, 6), expect++);
  EXPECT_EQ(expect, wedge_dim(6));
}

TEST(Subspace, CanonicalFormAndOperations) {
  const Field f = Field::make(3);
  const Subspace a = Subspace::span(f, 3, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(f, 3, {{1, 2, 1}, {0, 1, 1}});
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a, b);  // same span, identical RREF
  const Subspace line = Subspace::span(f, 3, {{0, 0, 1}});
  EXPECT_TRUE((a + line).is_full());
  EXPECT_TRUE(a.intersect(line).is_zero());
  EXPECT_TRUE(Subspace::span(f, 3, {{1, 1, 0}}).is_subspace_of(a));
  for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a.basis()(i, a.pivots()[i]), 1u);
}

TEST(Subspace, EnumerationCountsMatchGaussianBinomials) {
  // Number of k-dim subspaces of F_q^n.
  auto gauss = [](std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uint64_t a = 1, b = 1;
      for (std::uint64_t t = 0; t < n - i; ++t) a *= q;
      for (std::uint64_t t = 0; t < i + 1; ++t) b *= q;
      num *= a - 1;
      den *= b - 1;
    }
    return num / den;
  };
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 3}, {3, 4}, {5, 3}}) {
    const Field f = Field::make(q);
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t count = 0;
      for_each_subspace(f, n, k, k, [&](const Subspace& s) {
        EXPECT_EQ(s.dim(), k);
        ++count;
      });
      EXPECT_EQ(count, gauss(n, k, q)) << "q=" << q << " n=" << n << " k=" << k;
    }
  }
}
