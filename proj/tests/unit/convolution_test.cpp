#include <gtest/gtest.h>

#include "divconv/convolution.hpp"
#include "divconv/errors.hpp"
#include "divconv/provider.hpp"
#include "divconv/qseries.hpp"
#include "divconv/spaces.hpp"

using namespace divconv;

namespace {

// Coefficients of (sum sigma(n) q^{alpha n}) (sum sigma(n) q^{beta n}).
std::vector<Natural> product_of_sigma_series(std::int64_t alpha, std::int64_t beta, std::int64_t T) {
  std::vector<Natural> a(static_cast<std::size_t>(T) + 1), b(a.size()), out(a.size());
  for (std::int64_t n = 1; alpha * n <= T; ++n) a[static_cast<std::size_t>(alpha * n)] = sigma(1, n);
  for (std::int64_t n = 1; beta * n <= T; ++n) b[static_cast<std::size_t>(beta * n)] = sigma(1, n);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(T); ++i) {
    for (std::size_t j = 0; i + j <= static_cast<std::size_t>(T); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST(Convolution, BruteForceMatchesSeriesProduct) {
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {3, 5}, {2, 6}, {7, 8}}) {
    const auto want = product_of_sigma_series(a, b, 150);
    for (std::int64_t n = 0; n <= 150; ++n) ASSERT_EQ(brute_force_W(a, b, n), want[static_cast<std::size_t>(n)]);
  }
}

TEST(Convolution, DiagonalMatchesBruteForce) {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t n = 1; n <= 200; ++n) ASSERT_EQ(diagonal_W(a, n), BigRational(brute_force_W(a, a, n)));
  }
}

TEST(Convolution, GcdReduction) {
  const auto r = reduce_by_gcd(4, 6, 10);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->alpha, 2);
  EXPECT_EQ(r->beta, 3);
  EXPECT_EQ(r->n, 5);
  for (std::int64_t n = 1; n <= 120; ++n) {
    EXPECT_EQ(reduce_by_gcd(4, 6, n).has_value(), n % 2 == 0);
    EXPECT_EQ(brute_force_W(4, 6, n), n % 2 == 0 ? brute_force_W(2, 3, n / 2) : Natural(0));
  }
  EXPECT_FALSE(reduce_by_gcd(4, 6, 7).has_value());
  const auto coprime = reduce_by_gcd(3, 5, 7);
  ASSERT_TRUE(coprime.has_value());
  EXPECT_EQ(coprime->n, 7);
}

TEST(Convolution, DerivedFormulaMatchesBruteForce) {
  for (auto [a, b] : {std::pair{1, 10}, {2, 5}, {1, 15}, {3, 5}, {1, 14}}) {
    const std::int64_t level = a * b;
    const ModularBasis basis = build_search_basis(level, 201, SearchOptions{});
    const ConvolutionFormula f = derive_formula(a, b, basis);
    EXPECT_GE(f.verified_to, sturm_bound(level));
    const WClosedForm w = closed_form(f);
    const QSeries target = squared_difference(a, b, 201);
    for (std::int64_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(evaluate_W(f, basis, n), brute_force_W(a, b, n)) << a << "," << b << " n=" << n;
      ASSERT_EQ(evaluate_closed_form(w, basis, n), BigRational(brute_force_W(a, b, n)));
      ASSERT_EQ(identity_coefficient(f, basis, n), target[static_cast<std::size_t>(n)]);
    }
  }
}

// The sigma_3 and sigma parts of W do not depend on which cusp basis is used.
TEST(Convolution, EisensteinPartIsBasisIndependent) {
  for (auto [a, b] : {std::pair{1, 12}, {3, 4}, {1, 10}, {2, 5}}) {
    const std::int64_t level = a * b;
    const ModularBasis fixture = load_fixture_basis(level, 201);
    const ModularBasis search = build_search_basis(level, 201, SearchOptions{});
    const WClosedForm wf = closed_form(derive_formula(a, b, fixture));
    const WClosedForm ws = closed_form(derive_formula(a, b, search));
    EXPECT_EQ(wf.sigma3, ws.sigma3);
    EXPECT_EQ(wf.tail, ws.tail);
    for (std::int64_t n = 1; n <= 100; ++n) {
      ASSERT_EQ(evaluate_closed_form(wf, fixture, n), evaluate_closed_form(ws, search, n));
    }
  }
}

TEST(Convolution, MissingCuspPartIsDetected) {
  const ModularBasis eis_only(40, {}, 120, SelectionCase::Case1, BasisSource::Search);
  EXPECT_THROW(derive_formula(1, 40, eis_only), BasisNotSpanningError);
}

TEST(Convolution, EvaluationBeyondPrecisionThrows) {
  const ModularBasis basis = build_search_basis(10, 60, SearchOptions{});
  const ConvolutionFormula f = derive_formula(1, 10, basis, 50);
  EXPECT_THROW(evaluate_W(f, basis, 61), DomainError);
}
