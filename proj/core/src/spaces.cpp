#include "divconv/spaces.hpp"

#include <algorithm>
#include <numeric>

#include "divconv/checksum.hpp"
#include "divconv/errors.hpp"
#include "divconv/fixtures.hpp"

namespace divconv {

SpaceProfile profile(std::int64_t level) {
  if (level < 1) throw DomainError("level must be >= 1");
  SpaceProfile p;
  p.level = level;
  const auto primes = factorize(level);
  p.index_mu = level;
  for (const auto& [q, e] : primes) p.index_mu = p.index_mu / q * (q + 1);
  p.eps2 = 0;
  if (level % 4 != 0) {
    p.eps2 = 1;
    for (const auto& [q, e] : primes) {
      if (q == 2) continue;
      p.eps2 *= (q % 4 == 1) ? 2 : 0;
    }
  }
  p.eps3 = 0;
  if (level % 9 != 0) {
    p.eps3 = 1;
    for (const auto& [q, e] : primes) {
      if (q == 3) continue;
      p.eps3 *= (q % 3 == 1) ? 2 : 0;
    }
  }
  p.cusp_count = 0;
  for (auto d : divisors(level)) p.cusp_count += euler_phi(std::gcd(d, level / d));
  const std::int64_t twelve_g = 12 + p.index_mu - 3 * p.eps2 - 4 * p.eps3 - 6 * p.cusp_count;
  if (twelve_g % 12 != 0 || twelve_g < 0) {
    throw Error("genus formula gave " + std::to_string(twelve_g) + "/12 at level " + std::to_string(level));
  }
  p.genus = twelve_g / 12;
  p.dim_S4 = 3 * (p.genus - 1) + p.eps2 + p.eps3 + p.cusp_count;
  p.dim_E4 = p.cusp_count;
  p.dim_M4 = p.dim_E4 + p.dim_S4;
  return p;
}

std::int64_t cusp_dimension(std::int64_t level, int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("cusp_dimension needs even weight >= 2");
  const SpaceProfile p = profile(level);
  if (k == 2) return p.genus;
  return (k - 1) * (p.genus - 1) + (k / 2 - 1) * p.cusp_count + p.eps2 * (k / 4) + p.eps3 * (k / 3);
}

std::int64_t sturm_bound(std::int64_t level, int k) {
  const std::int64_t mu = profile(level).index_mu;
  return (k * mu + 11) / 12;
}

std::size_t default_working_precision(std::int64_t level) {
  const SpaceProfile p = profile(level);
  const std::int64_t a = 2 * sturm_bound(level);
  const std::int64_t b = p.dim_S4 + num_divisors(level) + 16;
  return static_cast<std::size_t>(std::max(a, b));
}

CuspGenerator CuspGenerator::from_eta(const EtaQuotient& e, std::string label) {
  CuspGenerator g;
  g.kind = GeneratorKind::EtaQuotient;
  g.eta = e;
  g.label = label.empty() ? e.label() : std::move(label);
  return g;
}

QSeries generator_series(const CuspGenerator& g, std::size_t precision) {
  QSeries s = eta_quotient_series(g.eta, precision);
  if (g.kind != GeneratorKind::EisensteinProduct) return s;
  const BigRational t(g.shift);
  QSeries e2 = scale(t, eisenstein_L(g.shift, precision)) - eisenstein_L(1, precision);
  return mul(s, e2);
}

std::string to_string(SelectionCase c) { return c == SelectionCase::Case1 ? "case1" : "case2"; }

std::string to_string(BasisSource s) { return s == BasisSource::Fixture ? "fixture" : "search"; }

ModularBasis::ModularBasis(std::int64_t level, std::vector<CuspGenerator> cusp, std::size_t precision,
                           SelectionCase selection, BasisSource source)
    : level_(level),
      eisenstein_(divisors(level)),
      cusp_(std::move(cusp)),
      precision_(precision),
      selection_(selection),
      source_(source) {
  series_.reserve(cusp_.size());
  for (const auto& g : cusp_) series_.push_back(generator_series(g, precision_));
}

const BigRational& ModularBasis::coefficient(std::size_t j, std::int64_t n) const {
  static const BigRational zero(0);
  if (n <= 0) return zero;
  return series_.at(j)[static_cast<std::size_t>(n)];
}

linalg::RationalMatrix ModularBasis::coefficient_rows(std::size_t rows) const {
  linalg::RationalMatrix m(rows, std::vector<BigRational>(cusp_.size()));
  for (std::size_t n = 1; n <= rows; ++n) {
    for (std::size_t j = 0; j < cusp_.size(); ++j) m[n - 1][j] = coefficient(j, static_cast<std::int64_t>(n));
  }
  return m;
}

std::size_t ModularBasis::independence_depth() const {
  const std::size_t m = cusp_.size();
  if (m == 0) return 0;
  // Grow the window until the rank is full; columns are checked exactly.
  for (std::size_t rows = m; rows <= precision_; ++rows) {
    if (linalg::rank(coefficient_rows(rows)) == m) return rows;
  }
  return 0;
}

std::string ModularBasis::checksum() const {
  std::string text = "level=" + std::to_string(level_) + ";E=";
  for (auto t : eisenstein_) text += std::to_string(t) + ",";
  const auto rows = static_cast<std::size_t>(std::min<std::int64_t>(sturm_bound(level_),
                                                                     static_cast<std::int64_t>(precision_)));
  for (std::size_t j = 0; j < cusp_.size(); ++j) {
    text += ";S" + std::to_string(j) + "=";
    for (std::size_t n = 1; n <= rows; ++n) text += series_[j][n].get_str() + ",";
  }
  return fnv1a64_hex(text);
}

std::string ModularBasis::id() const {
  return "level" + std::to_string(level_) + "-" + to_string(source_) + "-" + checksum();
}

ModularBasis ModularBasis::with_precision(std::size_t precision) const {
  return ModularBasis(level_, cusp_, precision, selection_, source_);
}

std::vector<QSeries> eisenstein_basis(std::int64_t level, std::size_t precision) {
  std::vector<QSeries> out;
  for (auto t : divisors(level)) out.push_back(eisenstein_M(t, precision));
  return out;
}

namespace {

std::int64_t generator_order(const QSeries& s) {
  auto v = s.valuation();
  return v ? static_cast<std::int64_t>(*v) : -1;
}

std::size_t rank_window(std::int64_t level, std::int64_t m_s, std::size_t precision) {
  return std::min<std::size_t>(precision, static_cast<std::size_t>(std::max(sturm_bound(level), m_s)));
}

}  // namespace

ModularBasis select_cusp_basis(std::int64_t level, const std::vector<CuspGenerator>& candidates,
                               std::size_t precision) {
  const std::int64_t m_s = profile(level).dim_S4;
  const std::size_t window = rank_window(level, m_s, precision);
  if (m_s == 0) return ModularBasis(level, {}, precision, SelectionCase::Case1, BasisSource::Search);

  std::vector<QSeries> series;
  std::vector<std::int64_t> orders;
  for (const auto& c : candidates) {
    series.push_back(generator_series(c, precision));
    orders.push_back(generator_order(series.back()));
  }

  auto rows_of = [&](const std::vector<std::size_t>& picked) {
    linalg::RationalMatrix m(window, std::vector<BigRational>(picked.size()));
    for (std::size_t n = 1; n <= window; ++n) {
      for (std::size_t j = 0; j < picked.size(); ++j) m[n - 1][j] = series[picked[j]][n];
    }
    return m;
  };

  // Case 1: one candidate for each order 1..m_S.
  std::vector<std::size_t> case1;
  for (std::int64_t ord = 1; ord <= m_s; ++ord) {
    auto it = std::find(orders.begin(), orders.end(), ord);
    if (it == orders.end()) break;
    case1.push_back(static_cast<std::size_t>(it - orders.begin()));
  }
  if (static_cast<std::int64_t>(case1.size()) == m_s &&
      static_cast<std::size_t>(m_s) <= window) {
    std::vector<CuspGenerator> chosen;
    for (auto i : case1) chosen.push_back(candidates[i]);
    return ModularBasis(level, std::move(chosen), precision, SelectionCase::Case1, BasisSource::Search);
  }

  // Case 2: greedy by increasing order, skipping dependent candidates.
  std::vector<std::size_t> by_order(candidates.size());
  std::iota(by_order.begin(), by_order.end(), std::size_t{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) { return orders[a] < orders[b]; });
  std::vector<std::size_t> picked;
  for (auto i : by_order) {
    if (orders[i] < 1) continue;
    picked.push_back(i);
    if (linalg::rank(rows_of(picked)) != picked.size()) {
      picked.pop_back();
      continue;
    }
    if (static_cast<std::int64_t>(picked.size()) == m_s) break;
  }
  if (static_cast<std::int64_t>(picked.size()) < m_s) {
    std::string missing;
    for (std::int64_t ord = 1; ord <= m_s; ++ord) {
      if (std::find(orders.begin(), orders.end(), ord) == orders.end()) {
        missing += (missing.empty() ? "" : ", ") + std::to_string(ord);
      }
    }
    throw BasisIncompleteError("level " + std::to_string(level) + ": found " + std::to_string(picked.size()) +
                               " independent cusp generators, need " + std::to_string(m_s) +
                               (missing.empty() ? "" : "; no candidate of order " + missing));
  }
  std::vector<CuspGenerator> chosen;
  for (auto i : picked) chosen.push_back(candidates[i]);
  return ModularBasis(level, std::move(chosen), precision, SelectionCase::Case2, BasisSource::Search);
}

bool has_fixture_basis(std::int64_t level) {
  const auto levels = fixtures::basis_levels();
  return std::find(levels.begin(), levels.end(), level) != levels.end();
}

std::vector<std::int64_t> fixture_basis_levels() { return fixtures::basis_levels(); }

ModularBasis load_fixture_basis(std::int64_t level, std::size_t precision) {
  const auto& gens = fixtures::basis_generators(level);
  std::vector<CuspGenerator> cusp;
  for (const auto& g : gens) {
    CuspGenerator c = CuspGenerator::from_eta(g.eta, g.label);
    if (g.declared) c.kind = GeneratorKind::DeclaredFixture;
    cusp.push_back(std::move(c));
  }
  const std::int64_t m_s = profile(level).dim_S4;
  // Case 1 exactly when the orders are 1..m_S in some arrangement.
  std::vector<std::int64_t> orders;
  for (const auto& g : gens) orders.push_back(order_at_infinity(g.eta));
  std::sort(orders.begin(), orders.end());
  std::vector<std::int64_t> expected(static_cast<std::size_t>(m_s));
  std::iota(expected.begin(), expected.end(), std::int64_t{1});
  const SelectionCase sel = orders == expected ? SelectionCase::Case1 : SelectionCase::Case2;
  ModularBasis basis(level, std::move(cusp), precision, sel, BasisSource::Fixture);

  const std::size_t window = rank_window(level, m_s, precision);
  if (static_cast<std::int64_t>(gens.size()) != m_s || linalg::rank(basis.coefficient_rows(window)) != gens.size()) {
    // Report the generators that add nothing to the span of the earlier ones.
    std::string dependent;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      kept.push_back(j);
      linalg::RationalMatrix m(window, std::vector<BigRational>(kept.size()));
      for (std::size_t n = 1; n <= window; ++n) {
        for (std::size_t k = 0; k < kept.size(); ++k) m[n - 1][k] = basis.coefficient(kept[k], static_cast<std::int64_t>(n));
      }
      if (linalg::rank(m) != kept.size()) {
        kept.pop_back();
        dependent += (dependent.empty() ? "" : ", ") + gens[j].label;
      }
    }
    throw BasisIncompleteError("fixture basis at level " + std::to_string(level) + " has rank " +
                               std::to_string(kept.size()) + " of " + std::to_string(m_s) +
                               (dependent.empty() ? "" : "; dependent rows: " + dependent));
  }
  return basis;
}

std::vector<CuspGenerator> search_candidates(std::int64_t level, const SearchOptions& options, bool with_products) {
  std::vector<CuspGenerator> out;
  for (const auto& e : search_cusp_forms(level, 8, options)) out.push_back(CuspGenerator::from_eta(e));
  if (!with_products) return out;
  SearchOptions w2 = options;
  w2.max_order = std::max<std::int64_t>(options.max_order, profile(level).dim_S4);
  for (const auto& e : search_cusp_forms(level, 4, w2)) {
    for (auto t : divisors(level)) {
      if (t == 1) continue;
      CuspGenerator g;
      g.kind = GeneratorKind::EisensteinProduct;
      g.eta = e;
      g.shift = t;
      g.label = e.label() + " (" + std::to_string(t) + "L(q^" + std::to_string(t) + ")-L(q))";
      out.push_back(std::move(g));
    }
  }
  return out;
}

ModularBasis build_search_basis(std::int64_t level, std::size_t precision, const SearchOptions& options) {
  try {
    return select_cusp_basis(level, search_candidates(level, options, false), precision);
  } catch (const BasisIncompleteError&) {
    return select_cusp_basis(level, search_candidates(level, options, true), precision);
  }
}

}  // namespace divconv
