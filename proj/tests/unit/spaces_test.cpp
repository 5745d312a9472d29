#include <gtest/gtest.h>

#include <numeric>

#include "divconv/arith.hpp"
#include "divconv/errors.hpp"
#include "divconv/fixtures.hpp"
#include "divconv/qseries.hpp"
#include "divconv/spaces.hpp"

using namespace divconv;

namespace {

std::int64_t index_by_primes(std::int64_t n) {
  std::int64_t mu = n;
  for (const auto& pp : factorize(n)) mu = mu / pp.prime * (pp.prime + 1);
  return mu;
}

std::int64_t cusps_by_divisors(std::int64_t n) {
  std::int64_t c = 0;
  for (auto d : divisors(n)) c += euler_phi(std::gcd(d, n / d));
  return c;
}

}  // namespace

TEST(Spaces, ProfileInvariants) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const SpaceProfile p = profile(n);
    ASSERT_EQ(p.index_mu, index_by_primes(n));
    ASSERT_EQ(p.cusp_count, cusps_by_divisors(n));
    ASSERT_EQ(p.dim_E4, p.cusp_count);
    ASSERT_EQ(p.dim_M4, p.dim_E4 + p.dim_S4);
    ASSERT_EQ(p.dim_S4, cusp_dimension(n, 4));
    ASSERT_EQ(sturm_bound(n), (4 * p.index_mu + 11) / 12);
    ASSERT_GE(p.genus, 0);
  }
  EXPECT_EQ(sturm_bound(1), 1);
  EXPECT_THROW(profile(0), DomainError);
}

TEST(Spaces, PublishedDimensionsReproduce) {
  for (const auto& d : fixtures::printed_dimensions()) {
    const SpaceProfile p = profile(d.level);
    if (d.dim_E4 != 0) EXPECT_EQ(p.dim_E4, d.dim_E4) << d.level;
    EXPECT_EQ(p.dim_S4, d.dim_S4) << d.level;
  }
}

// A search basis is a set of independent cusp forms; its size can only equal
// the dimension if the formula is right.
TEST(Spaces, SearchBasisSpansCuspSpace) {
  for (std::int64_t level : {10, 11, 12, 14, 15, 24, 33}) {
    const ModularBasis b = build_search_basis(level, default_working_precision(level), SearchOptions{});
    EXPECT_EQ(static_cast<std::int64_t>(b.cusp().size()), cusp_dimension(level, 4)) << level;
    EXPECT_GT(b.independence_depth(), 0u) << level;
    EXPECT_EQ(b.source(), BasisSource::Search);
    for (std::size_t j = 0; j < b.cusp().size(); ++j) EXPECT_EQ(b.coefficient(j, 0), 0);
  }
}

TEST(Spaces, FixtureBasisMatchesEtaExpansion) {
  const ModularBasis b = load_fixture_basis(12, 60);
  const auto& gens = fixtures::basis_generators(12);
  ASSERT_EQ(b.cusp().size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const QSeries s = eta_quotient_series(gens[j].eta, 60);
    for (std::int64_t n = 1; n <= 60; ++n) ASSERT_EQ(b.coefficient(j, n), s[static_cast<std::size_t>(n)]);
  }
  EXPECT_EQ(b.eisenstein(), divisors(12));
  EXPECT_THROW(load_fixture_basis(17, 40), UnknownFixtureError);
}

TEST(Spaces, ChecksumIgnoresPrecision) {
  const ModularBasis b = load_fixture_basis(40, 80);
  EXPECT_EQ(b.checksum(), b.with_precision(120).checksum());
  EXPECT_NE(b.checksum(), load_fixture_basis(56, 80).checksum());
}

TEST(Spaces, EisensteinBasisIsIndependent) {
  for (std::int64_t level : {12, 40}) {
    const auto e = eisenstein_basis(level, 60);
    linalg::RationalMatrix rows;
    for (std::size_t n = 0; n <= 60; ++n) {
      std::vector<BigRational> row;
      for (const auto& s : e) row.push_back(s[n]);
      rows.push_back(row);
    }
    EXPECT_EQ(linalg::rank(rows), e.size());
  }
}
