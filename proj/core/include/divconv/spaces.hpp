#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/eta.hpp"
#include "divconv/eta_quotient.hpp"
#include "divconv/linalg.hpp"
#include "divconv/qseries.hpp"

namespace divconv {

/// Dimensions and invariants of the weight-4 spaces for Gamma_0(N).
struct SpaceProfile {
  std::int64_t level = 0;
  std::int64_t index_mu = 0;
  std::int64_t eps2 = 0;
  std::int64_t eps3 = 0;
  std::int64_t cusp_count = 0;
  std::int64_t genus = 0;
  std::int64_t dim_E4 = 0;
  std::int64_t dim_S4 = 0;
  std::int64_t dim_M4 = 0;
};

SpaceProfile profile(std::int64_t level);

/// dim S_k(Gamma_0(N)) for even k >= 2.
std::int64_t cusp_dimension(std::int64_t level, int k);

/// ceil(k * mu(N) / 12).
std::int64_t sturm_bound(std::int64_t level, int k = 4);

/// max(2 * Sturm bound, m_S + d(N) + 16).
std::size_t default_working_precision(std::int64_t level);

enum class GeneratorKind {
  EtaQuotient,       // weight-4 eta quotient
  DeclaredFixture,   // embedded generator taken as given (may have another weight)
  EisensteinProduct, // weight-2 eta quotient times (t L(q^t) - L(q))
};

struct CuspGenerator {
  GeneratorKind kind = GeneratorKind::EtaQuotient;
  EtaQuotient eta;
  /// t for EisensteinProduct, unused otherwise.
  std::int64_t shift = 0;
  std::string label;

  static CuspGenerator from_eta(const EtaQuotient& e, std::string label = {});
};

/// q-expansion of a generator to precision T.
QSeries generator_series(const CuspGenerator& g, std::size_t precision);

enum class SelectionCase { Case1, Case2 };
enum class BasisSource { Fixture, Search };

std::string to_string(SelectionCase c);
std::string to_string(BasisSource s);

/// Eisenstein part {M(q^t) : t | N} plus an ordered cusp part, with the cusp
/// generators expanded to `precision`.
class ModularBasis {
 public:
  ModularBasis(std::int64_t level, std::vector<CuspGenerator> cusp, std::size_t precision, SelectionCase selection,
               BasisSource source);

  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& eisenstein() const { return eisenstein_; }
  const std::vector<CuspGenerator>& cusp() const { return cusp_; }
  const std::vector<QSeries>& cusp_series() const { return series_; }
  std::size_t precision() const { return precision_; }
  SelectionCase selection() const { return selection_; }
  BasisSource source() const { return source_; }

  /// b_j(n), j 0-based; zero for n <= 0 or non-integral index.
  const BigRational& coefficient(std::size_t j, std::int64_t n) const;

  /// Rows n = 1..rows, one column per cusp generator.
  linalg::RationalMatrix coefficient_rows(std::size_t rows) const;

  /// Smallest R with rank of rows 1..R equal to the cusp count, or 0 when the
  /// generators are dependent up to the precision.
  std::size_t independence_depth() const;

  /// FNV-1a over level, Eisenstein degrees and the first Sturm-bound rows.
  std::string checksum() const;
  std::string id() const;

  ModularBasis with_precision(std::size_t precision) const;

 private:
  std::int64_t level_;
  std::vector<std::int64_t> eisenstein_;
  std::vector<CuspGenerator> cusp_;
  std::vector<QSeries> series_;
  std::size_t precision_;
  SelectionCase selection_;
  BasisSource source_;
};

/// M(q^t) for t | N ascending.
std::vector<QSeries> eisenstein_basis(std::int64_t level, std::size_t precision);

/// Case 1 when every order 1..m_S is present among the candidates (first
/// candidate per order wins); otherwise Case 2, a greedy scan by increasing
/// order keeping candidates that raise the exact rank. Throws
/// BasisIncompleteError when fewer than m_S independent candidates exist.
ModularBasis select_cusp_basis(std::int64_t level, const std::vector<CuspGenerator>& candidates,
                               std::size_t precision);

bool has_fixture_basis(std::int64_t level);
std::vector<std::int64_t> fixture_basis_levels();

/// Embedded generators in their published order. Throws UnknownFixtureError,
/// or BasisIncompleteError naming the dependent rows.
ModularBasis load_fixture_basis(std::int64_t level, std::size_t precision);

/// Weight-4 cusp eta quotients from the exhaustive search, topped up with
/// weight-2 cusp eta quotients times (t L(q^t) - L(q)) when the search alone
/// cannot span S_4.
std::vector<CuspGenerator> search_candidates(std::int64_t level, const SearchOptions& options, bool with_products);
ModularBasis build_search_basis(std::int64_t level, std::size_t precision, const SearchOptions& options);

}  // namespace divconv
