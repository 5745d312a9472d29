#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "divconv/arith.hpp"
#include "divconv/checksum.hpp"
#include "divconv/errors.hpp"
#include "divconv/linalg.hpp"

using namespace divconv;

namespace {

Natural naive_sigma(unsigned k, std::int64_t n) {
  Natural s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Natural p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
      s += p;
    }
  }
  return s;
}

}  // namespace

TEST(Arith, SigmaMatchesDivisorLoop) {
  for (unsigned k : {0u, 1u, 3u}) {
    for (std::int64_t n = 1; n <= 400; ++n) ASSERT_EQ(sigma(k, n), naive_sigma(k, n)) << k << " " << n;
  }
  EXPECT_EQ(sigma(1, 0), 0);
  EXPECT_EQ(sigma(3, -5), 0);
}

TEST(Arith, SigmaScaledVanishesOffDivisors) {
  for (std::int64_t n = 1; n <= 120; ++n) {
    for (std::int64_t d : {1, 2, 3, 7, 12}) {
      EXPECT_EQ(sigma_scaled(3, n, d), n % d == 0 ? naive_sigma(3, n / d) : Natural(0));
    }
  }
  EXPECT_THROW(sigma_scaled(1, 5, 0), DomainError);
}

TEST(Arith, FactorizationMultipliesBack) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t prod = 1;
    std::int64_t last = 1;
    for (const auto& pp : factorize(n)) {
      EXPECT_GT(pp.prime, last);
      last = pp.prime;
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(Arith, DivisorsAndPhi) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::vector<std::int64_t> naive;
    std::int64_t coprime = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) naive.push_back(d);
      if (std::gcd(d, n) == 1) ++coprime;
    }
    ASSERT_EQ(divisors(n), naive);
    ASSERT_EQ(num_divisors(n), static_cast<std::int64_t>(naive.size()));
    ASSERT_EQ(euler_phi(n), coprime);
  }
  EXPECT_THROW(divisors(0), DomainError);
  EXPECT_THROW(euler_phi(-3), DomainError);
}

TEST(Arith, RationalsAreCanonical) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_THROW(make_rational(1, 0), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    long den = dist(rng);
    if (den == 0) den = 1;
    const BigRational r = make_rational(dist(rng), den);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x/3"), DomainError);
  EXPECT_TRUE(is_integer(parse_rational("-12/4")));
}

TEST(Arith, LevelClassification) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    const LevelClass c = classify_level(n);
    std::int64_t mho = n;
    int nu = 0;
    while (mho % 2 == 0) {
      mho /= 2;
      ++nu;
    }
    bool squarefree = true;
    for (std::int64_t p = 3; p * p <= mho; p += 2) squarefree = squarefree && mho % (p * p) != 0;
    EXPECT_EQ(c.nu, nu);
    EXPECT_EQ(c.mho, mho);
    EXPECT_EQ(c.in_class, nu <= 3 && squarefree) << n;
  }
}

TEST(Linalg, RankAndSolve) {
  using linalg::RationalMatrix;
  const RationalMatrix a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(linalg::rank(a), 2u);
  EXPECT_EQ(linalg::determinant({{2, 1}, {7, 4}}), 1);
  const RationalMatrix sq = {{2, 1}, {1, 3}, {3, 4}};
  auto r = linalg::solve(sq, {BigRational(3), BigRational(4), BigRational(7)});
  ASSERT_EQ(r.status, linalg::SolveStatus::Unique);
  EXPECT_EQ(r.x[0], 1);
  EXPECT_EQ(r.x[1], 1);
  EXPECT_EQ(linalg::solve(sq, {BigRational(3), BigRational(4), BigRational(8)}).status,
            linalg::SolveStatus::Inconsistent);
  EXPECT_EQ(linalg::solve(a, {BigRational(1), BigRational(2), BigRational(0)}).status,
            linalg::SolveStatus::Underdetermined);
}

TEST(Checksum, FnvKnownVectors) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64_hex("foobar"), "85944171f73967e8");
}
