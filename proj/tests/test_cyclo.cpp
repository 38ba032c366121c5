#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace charzero;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  return IntPolynomial(std::vector<mpz_class>(c.begin(), c.end()));
}

std::vector<long> coeffs_of(const Cyclotomic& a) {
  std::vector<long> out;
  for (const auto& c : a.coeffs()) out.push_back(c.get_si());
  return out;
}

Cyclotomic raw(std::uint64_t n, std::vector<long> c) { return Cyclotomic::reduce(n, std::span<const long>(c)); }

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), poly({1, 0, 0, 1, 0, 0, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), DomainError);
}

TEST(CyclotomicPolynomial, Coefficient105HasMinusTwo) {
  const auto& p = cyclotomic_polynomial(105);
  EXPECT_EQ(p.degree(), 48);
  EXPECT_EQ(p[7], -2);
}

TEST(CyclotomicPolynomial, DivisorProductIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPolynomial product = poly({1});
    for (auto d : divisors(n)) product = product * cyclotomic_polynomial(d);
    std::vector<mpz_class> expected(n + 1);
    expected[0] = -1;
    expected[n] = 1;
    ASSERT_EQ(product, IntPolynomial(expected)) << n;
    ASSERT_EQ(static_cast<std::uint64_t>(cyclotomic_polynomial(n).degree()), euler_phi(n)) << n;
  }
}

TEST(Cyclotomic, ReduceExamples) {
  EXPECT_EQ(coeffs_of(raw(4, {0, 0, 1})), (std::vector<long>{-1, 0}));
  EXPECT_TRUE(raw(3, {1, 1, 1}).is_zero());
  EXPECT_EQ(coeffs_of(raw(5, {0, 1, 0, 0, 1})), (std::vector<long>{-1, 0, -1, -1}));
  EXPECT_EQ(raw(1, {3, 4}).rational_part(), 7);
  EXPECT_EQ(raw(6, {7}).to_string(), "[7,0]@6");
}

TEST(Cyclotomic, RingOperations) {
  const auto one = Cyclotomic::integer(5, 1);
  const auto z = Cyclotomic::root_of_unity(5, 1);
  EXPECT_EQ(coeffs_of((one + z) * (one + z.galois(4))), (std::vector<long>{1, 0, -1, -1}));
  const auto i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic::integer(4, -1));
  EXPECT_EQ(i - i, Cyclotomic::zero(4));
  EXPECT_EQ(-i, Cyclotomic::root_of_unity(4, 3));
  EXPECT_EQ(i.scaled(3), i + i + i);
  EXPECT_EQ(z.conjugate(), Cyclotomic::root_of_unity(5, -1));
  EXPECT_EQ(z.galois(2) * z.galois(3), one);
}

TEST(Cyclotomic, ZeroTests) {
  const auto s = Cyclotomic::root_of_unity(6, 1) + Cyclotomic::root_of_unity(6, 5) - Cyclotomic::integer(6, 1);
  EXPECT_TRUE(s.is_zero());
  EXPECT_FALSE(Cyclotomic::root_of_unity(7, 3).is_zero());
  EXPECT_TRUE(Cyclotomic::zero(12).is_rational());
  EXPECT_TRUE((Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2)).is_rational());
  EXPECT_FALSE(Cyclotomic::root_of_unity(3, 1).is_rational());
}

TEST(Cyclotomic, AbsSquare) {
  const auto a = Cyclotomic::integer(5, 1) + Cyclotomic::root_of_unity(5, 1);
  const auto expected = Cyclotomic::integer(5, 2) + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  EXPECT_EQ(a.abs_square(), expected);
  EXPECT_NEAR(a.abs_square().approx().real(), std::norm(a.approx()), 1e-12);
  EXPECT_NEAR(a.abs_square().approx().imag(), 0.0, 1e-12);
}

TEST(Cyclotomic, Approx) {
  const auto z = Cyclotomic::root_of_unity(8, 1).approx();
  EXPECT_NEAR(z.real(), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(z.imag(), std::sqrt(0.5), 1e-12);
  const auto b7 = Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, 2) + Cyclotomic::root_of_unity(7, 4);
  EXPECT_NEAR(b7.approx().real(), -0.5, 1e-12);
  EXPECT_NEAR(b7.approx().imag(), std::sqrt(7.0) / 2, 1e-12);
}

TEST(Cyclotomic, LiftingPreservesValue) {
  const auto w = Cyclotomic::root_of_unity(3, 1);
  const auto lifted = w.lifted(12);
  EXPECT_EQ(lifted.conductor(), 12u);
  EXPECT_EQ(lifted, Cyclotomic::root_of_unity(12, 4));
  EXPECT_TRUE(equal_values(w, lifted));
  EXPECT_FALSE(equal_values(w, Cyclotomic::root_of_unity(12, 8)));
  EXPECT_THROW(w.lifted(10), DomainError);
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(4, 1), DomainError);
  EXPECT_THROW(Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(5, 1), DomainError);
  EXPECT_THROW(Cyclotomic::zero(0), DomainError);
  EXPECT_THROW(raw(0, {1}), DomainError);
}

TEST(Cyclotomic, OrderingIsConductorThenCoefficients) {
  EXPECT_LT(Cyclotomic::integer(3, 5), Cyclotomic::integer(4, -5));
  EXPECT_LT(Cyclotomic::integer(4, -1), Cyclotomic::integer(4, 0));
  EXPECT_LT(Cyclotomic::root_of_unity(4, 3), Cyclotomic::root_of_unity(4, 1));
}

TEST(Cyclotomic, ReductionIsCanonicalAndValuePreserving) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (std::uint64_t n = 1; n <= 120; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long> a(n);
      for (auto& c : a) c = coef(rng);
      const auto reduced = raw(n, a);
      ASSERT_EQ(reduced.coeffs().size(), euler_phi(n));
      // Adding a multiple of Phi_n (shifted, with wraparound) must not change the residue.
      auto b = a;
      const long m = coef(rng);
      const std::size_t shift = rng() % n;
      for (int j = 0; j <= phi.degree(); ++j) b[(j + shift) % n] += m * phi[j].get_si();
      ASSERT_EQ(raw(n, b), reduced) << n;
      const auto expected = oracle::numeric_sum(n, a);
      ASSERT_NEAR(reduced.approx().real(), expected.real(), 1e-9) << n;
      ASSERT_NEAR(reduced.approx().imag(), expected.imag(), 1e-9) << n;
    }
  }
}

TEST(Cyclotomic, ZeroTestsAgree) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (std::uint64_t n = 1; n <= 90; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<mpz_class> a(n);
      if (trial % 2 == 0) {
        // A combination of shifted copies of Phi_n vanishes.
        for (int k = 0; k < 3; ++k) {
          const long m = coef(rng);
          const std::size_t shift = rng() % n;
          for (int j = 0; j <= phi.degree(); ++j) a[(j + shift) % n] += m * phi[j];
        }
      } else {
        for (auto& c : a) c = coef(rng);
      }
      const auto value = Cyclotomic::reduce(n, a);
      const bool zero = value.is_zero();
      ASSERT_EQ(zero, is_zero_tensor(n, a)) << n;
      ASSERT_EQ(zero, value.abs_square().is_zero()) << n;
      CyclotomicSum sum(n);
      sum.add(value);
      ASSERT_EQ(zero, sum.is_zero()) << n;
      if (trial % 2 == 0) ASSERT_TRUE(zero) << n;
    }
  }
}

TEST(CyclotomicSum, MatchesDirectArithmetic) {
  CyclotomicSum sum(12);
  const auto a = Cyclotomic::root_of_unity(3, 1);
  const auto b = Cyclotomic::root_of_unity(4, 1);
  sum.add(a, 2);
  sum.add(b.lifted(12) * a.lifted(12));
  sum.add_product_conj(b, b, 5);
  sum.add_integer(-5);
  const auto expected = a.lifted(12).scaled(2) + b.lifted(12) * a.lifted(12);
  EXPECT_EQ(sum.value(), expected);
  EXPECT_FALSE(sum.is_zero());
  EXPECT_THROW(sum.add(Cyclotomic::root_of_unity(5, 1)), DomainError);
}
