#include <gtest/gtest.h>

#include <random>

#include "divconv/errors.hpp"
#include "divconv/qseries.hpp"

using namespace divconv;

namespace {

// prod_n (1 - q^{m n})^e by repeated multiplication with integer polynomials.
std::vector<Integer> product_by_multiplication(std::int64_t m, int e, std::size_t T) {
  std::vector<Integer> out(T + 1);
  out[0] = 1;
  for (std::size_t k = static_cast<std::size_t>(m); k <= T; k += static_cast<std::size_t>(m)) {
    for (int rep = 0; rep < std::abs(e); ++rep) {
      if (e > 0) {
        for (std::size_t i = T; i >= k; --i) out[i] -= out[i - k];
      } else {
        for (std::size_t i = k; i <= T; ++i) out[i] += out[i - k];  // divide by (1 - q^k)
      }
    }
  }
  return out;
}

}  // namespace

TEST(QSeries, MultiplicationMatchesSchoolbook) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigRational> a(31), b(26);
    for (auto& x : a) x = BigRational(dist(rng), 1 + std::abs(dist(rng)));
    for (auto& x : b) x = BigRational(dist(rng), 1 + std::abs(dist(rng)));
    for (auto& x : a) x.canonicalize();
    for (auto& x : b) x.canonicalize();
    const QSeries p = QSeries(a) * QSeries(b);
    ASSERT_EQ(p.precision(), 25u);
    for (std::size_t n = 0; n <= 25; ++n) {
      BigRational s = 0;
      for (std::size_t i = 0; i <= n; ++i) s += a[i] * b[n - i];
      ASSERT_EQ(p[n], s);
    }
  }
}

TEST(QSeries, SquareOfLIsAnEisensteinCombination) {
  const std::size_t T = 200;
  const QSeries L = eisenstein_L(1, T);
  const QSeries sq = L * L;
  EXPECT_EQ(sq[0], 1);
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(T); ++n) {
    ASSERT_EQ(sq[static_cast<std::size_t>(n)], BigRational(240 * sigma(3, n) - 288 * n * sigma(1, n))) << n;
  }
}

TEST(QSeries, SubstituteAndSquaredDifference) {
  const std::size_t T = 60;
  EXPECT_EQ(substitute_power(eisenstein_L(1, T), 3), eisenstein_L(3, T));
  EXPECT_EQ(substitute_power(eisenstein_M(1, T), 2), eisenstein_M(2, T));
  const QSeries direct = scale(2, eisenstein_L(2, T)) - scale(5, eisenstein_L(5, T));
  EXPECT_EQ(squared_difference(2, 5, T), direct * direct);
  EXPECT_THROW(substitute_power(eisenstein_L(1, T), 0), DomainError);
}

TEST(QSeries, EulerProductPowersMatchMultiplication) {
  const std::size_t T = 120;
  for (std::int64_t m : {1, 2, 5}) {
    for (int e : {-7, -1, 1, 3, 8}) {
      const QSeries got = euler_product_power(m, e, T);
      const auto want = product_by_multiplication(m, e, T);
      for (std::size_t n = 0; n <= T; ++n) ASSERT_EQ(got[n], BigRational(want[n])) << m << " " << e << " " << n;
    }
  }
}

TEST(QSeries, EtaQuotientIsShiftedProduct) {
  const std::size_t T = 80;
  const EtaQuotient e(40, {{1, 2}, {2, -1}, {5, 3}, {20, 4}});  // sum delta r = 2 - 2 + 15 + 80 = 95: not 0 mod 24
  EXPECT_THROW(eta_quotient_series(e, T), NonIntegralExponentError);

  const EtaQuotient g(10, {{1, 4}, {5, 4}});  // order (4 + 20) / 24 = 1
  const QSeries s = eta_quotient_series(g, T);
  const QSeries expect = euler_product_power(1, 4, T) * euler_product_power(5, 4, T);
  EXPECT_EQ(s[0], 0);
  for (std::size_t n = 1; n <= T; ++n) ASSERT_EQ(s[n], expect[n - 1]);
  EXPECT_EQ(s.valuation(), std::optional<std::size_t>(1));
  EXPECT_TRUE(s.is_integral());
}

TEST(QSeries, BoundsAreChecked) {
  const QSeries s(5);
  EXPECT_TRUE(s.is_zero());
  EXPECT_FALSE(s.valuation().has_value());
  EXPECT_THROW(s[6], std::out_of_range);
  EXPECT_THROW(QSeries(std::vector<BigRational>{}), DomainError);
}
