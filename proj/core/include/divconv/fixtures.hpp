#pragma once

// Published reference data: eta-exponent tables, fixture bases, printed
// squared-difference expansions, printed W formulas and printed
// representation-number assemblies. Kept in one place so audits of the
// printed values touch a single file.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/eta_quotient.hpp"
#include "divconv/forms.hpp"

namespace divconv::fixtures {

/// Exponent rows over the ascending divisors of `level`.
struct ExponentTable {
  std::int64_t level = 0;
  std::vector<std::vector<int>> rows;
};

const ExponentTable& table_level33();
const ExponentTable& table_level40();
const ExponentTable& table_level56();

struct FixtureGenerator {
  EtaQuotient eta;
  std::string label;
  /// Generators of another weight are carried as declared fixtures.
  bool declared = false;
};

/// Throws UnknownFixtureError for levels without an embedded basis.
const std::vector<FixtureGenerator>& basis_generators(std::int64_t level);
std::vector<std::int64_t> basis_levels();

enum class PrintAnomaly {
  None,
  OperatorMissing,  // value printed with no + or - in front of it
  TermAbsent,       // index skipped in an otherwise complete list
};

struct PrintedCoefficient {
  BigRational value;
  PrintAnomaly anomaly = PrintAnomaly::None;
};

/// (alpha L(q^alpha) - beta L(q^beta))^2 = constant + sum_n (sum_delta s_delta
/// sigma_3(n/delta) + sum_j c_j b_j(n)) q^n on the fixture basis of `level`.
struct PrintedExpansion {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  BigRational constant;
  std::map<std::int64_t, PrintedCoefficient> sigma3;
  std::vector<PrintedCoefficient> cusp;
};

/// (constant + per_n * n) sigma(n / divisor).
struct PrintedTail {
  BigRational constant;
  BigRational per_n;
  std::int64_t divisor = 1;
};

struct PrintedW {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::map<std::int64_t, PrintedCoefficient> sigma3;
  std::vector<PrintedTail> tail;
  std::vector<PrintedCoefficient> cusp;
};

const std::vector<PrintedExpansion>& printed_expansions();
const std::vector<PrintedW>& printed_w_formulas();
const PrintedExpansion* find_expansion(std::int64_t alpha, std::int64_t beta);
const PrintedW* find_w(std::int64_t alpha, std::int64_t beta);

/// Printed claim b_target(n) = b_source(n / power) between generators of a
/// fixture basis (0-based indices).
struct PrintedRelation {
  std::int64_t level = 0;
  std::size_t target = 0;
  std::size_t source = 0;
  std::int64_t power = 1;
};

const std::vector<PrintedRelation>& printed_relations();

/// A printed representation-number formula as a list of sigma and W calls.
struct PrintedRepFormula {
  Form form = Form::Quad;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<SigmaCall> sigma;
  std::vector<WCall> w;
  /// Closed form in sigma_3 when one is printed.
  std::vector<SigmaCall> sigma3;
};

const std::vector<PrintedRepFormula>& printed_rep_formulas();

/// Printed dimensions; dim_E4 is 0 when only the cusp dimension is stated.
struct PrintedDimension {
  std::int64_t level = 0;
  std::int64_t dim_E4 = 0;
  std::int64_t dim_S4 = 0;
};

const std::vector<PrintedDimension>& printed_dimensions();

struct PrintedPairSet {
  std::int64_t level = 0;
  Form form = Form::Quad;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

const std::vector<PrintedPairSet>& printed_pair_sets();

}  // namespace divconv::fixtures
