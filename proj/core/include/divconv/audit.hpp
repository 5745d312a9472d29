#pragma once

// Regression of the embedded published data against independent oracles.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "divconv/eta.hpp"
#include "divconv/provider.hpp"

namespace divconv {

enum class Verdict {
  Pass,
  Fail,
  /// The printed value is wrong or malformed and the oracle settles what the
  /// correct value is.
  DocumentedDiscrepancy,
  /// Needs data the library cannot produce (e.g. a level outside the class).
  Skipped,
};

std::string to_string(Verdict v);

struct AuditItem {
  std::string id;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct AuditOptions {
  /// Depth of W comparisons against brute force.
  std::int64_t w_depth = 200;
  /// Depth of representation-number comparisons against the lattice oracle.
  std::int64_t rep_depth = 100;
  SearchOptions search;
  /// Called after each item; lets the CLI stream progress.
  std::function<void(const AuditItem&)> on_item;
};

std::vector<AuditItem> audit_dimensions();
std::vector<AuditItem> audit_tables(const SearchOptions& search);
std::vector<AuditItem> audit_relations();
std::vector<AuditItem> audit_expansions();
std::vector<AuditItem> audit_w_formulas(FormulaProvider& provider, std::int64_t depth);
/// Settles the printed level-11 W formula by brute force; never FAIL unless
/// the library's own level-11 formula is wrong.
AuditItem audit_level11(FormulaProvider& provider, std::int64_t depth);
std::vector<AuditItem> audit_oracle_equivalence(FormulaProvider& provider, std::int64_t depth);
std::vector<AuditItem> audit_diagonal(std::int64_t depth);
std::vector<AuditItem> audit_pair_sets();
std::vector<AuditItem> audit_rep_formulas(FormulaProvider& provider, std::int64_t depth);

/// Everything above, in that order.
std::vector<AuditItem> run_audit(FormulaProvider& provider, const AuditOptions& options = {});

bool audit_passed(const std::vector<AuditItem>& items);

}  // namespace divconv
