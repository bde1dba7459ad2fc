#include <gtest/gtest.h>

#include "ucsiac/field.hpp"

using namespace ucs;

namespace {

// Schoolbook arithmetic on coefficient vectors, independent of the field tables.
std::vector<std::int64_t> poly_mul_mod(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::int64_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::int64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= k; ++t) prod[d - k + t] = ((prod[d - k + t] - c * modulus[t]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

std::vector<std::int64_t> as_coeffs(const Field& f, Scalar x) {
  auto c = f.coeffs(x);
  return {c.begin(), c.end()};
}

}  // namespace

TEST(Field, PrimeFieldConstruction) {
  const Field f = Field::make(3);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.characteristic(), 3u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_TRUE(f.is_prime_field());
  EXPECT_TRUE(f.modulus().empty());
}

TEST(Field, LeastIrreducibleQuadraticOverF3) {
  // Scan the nine monic quadratics x^2 + bx + c; the first without a root in F_3 is the modulus.
  std::vector<std::uint32_t> expected;
  for (std::uint32_t idx = 0; idx < 9 && expected.empty(); ++idx) {
    const std::uint32_t c = idx % 3, b = idx / 3;
    bool has_root = false;
    for (std::uint32_t x = 0; x < 3; ++x) has_root = has_root || (x * x + b * x + c) % 3 == 0;
    if (!has_root) expected = {c, b, 1};
  }
  const Field f9 = Field::make(3, 2);
  EXPECT_EQ(f9.modulus(), expected);
  EXPECT_EQ(f9.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, ConstructionErrors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { Field::make(9, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { Field::make(2, 1); }), ErrorCode::EvenCharacteristic);
  EXPECT_EQ(code_of([] { Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { Field::of_order(12); }), ErrorCode::NotPrime);
}

TEST(Field, Examples) {
  const Field f7 = Field::make(7);
  EXPECT_EQ(f7.inv(3), 5u);
  const Field f9 = Field::make(3, 2);
  const Scalar x = f9.from_coeffs({0, 1});
  EXPECT_EQ(f9.mul(x, x), f9.from_int(2));
  const Field f11 = Field::make(11);
  EXPECT_EQ(f11.pow(2, -1), 6u);
  EXPECT_THROW(f11.inv(0), Error);
}

TEST(Field, ElementWrapperRejectsMixedFields) {
  const Field a = Field::make(5), b = Field::make(7);
  EXPECT_THROW((void)(a.elem(1) + b.elem(1)), Error);
  EXPECT_EQ((a.elem(2) * a.elem(3)).code(), 1u);
  EXPECT_EQ(a.elem(-1).code(), 4u);
}

TEST(Field, ElementOfOrder) {
  const Field f11 = Field::make(11);
  EXPECT_EQ(element_of_order(f11, 5).code(), 3u);
  EXPECT_EQ(element_of_order(f11, 1).code(), 1u);
  try {
    element_of_order(Field::make(7), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderDoesNotDivide);
  }
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
    const Field f = Field::of_order(q);
    for (std::uint64_t n = 1; n < q; ++n) {
      if ((q - 1) % n) continue;
      const Scalar z = element_of_order(f, n).code();
      // Brute-force order by repeated multiplication.
      std::uint64_t ord = 1;
      for (Scalar y = z; y != 1; y = f.mul(y, z)) ++ord;
      EXPECT_EQ(ord, n) << "q=" << q;
      // Least such element in code order.
      for (Scalar a = 1; a < z; ++a) {
        std::uint64_t o = 1;
        for (Scalar y = a; y != 1; y = f.mul(y, a)) ++o;
        EXPECT_NE(o, n);
      }
    }
  }
}

TEST(Field, ExtensionArithmeticMatchesSchoolbook) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field f = Field::make(p, k);
    for (Scalar a = 0; a < f.order(); ++a)
      for (Scalar b = 0; b < f.order(); ++b) {
        const auto expect = poly_mul_mod(as_coeffs(f, a), as_coeffs(f, b), f.modulus(), p);
        EXPECT_EQ(as_coeffs(f, f.mul(a, b)), expect);
        auto sum = as_coeffs(f, a);
        const auto cb = as_coeffs(f, b);
        for (std::size_t i = 0; i < k; ++i) sum[i] = (sum[i] + cb[i]) % p;
        EXPECT_EQ(as_coeffs(f, f.add(a, b)), sum);
      }
  }
}

TEST(Field, NameAndOrder) {
  EXPECT_EQ(Field::of_order(9).order(), 9u);
  EXPECT_EQ(Field::of_order(9).degree(), 2u);
  EXPECT_EQ(Field::of_order(13).name(), "F_13");
}
