// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values come from independent oracles (brute-force W, lattice counts,
// direct enumeration) or from the embedded published data being regressed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/audit.hpp"
#include "divconv/convolution.hpp"
#include "divconv/errors.hpp"
#include "divconv/eta.hpp"
#include "divconv/fixtures.hpp"
#include "divconv/provider.hpp"
#include "divconv/qseries.hpp"
#include "divconv/representation.hpp"
#include "divconv/spaces.hpp"

using namespace divconv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;

  void fail(std::string why) {
    pass = false;
    problems.push_back(std::move(why));
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// A printed value agrees with a derived one, allowing only the readings a
// flagged print anomaly admits.
bool printed_agrees(const fixtures::PrintedCoefficient& c, const BigRational& derived) {
  switch (c.anomaly) {
    case fixtures::PrintAnomaly::None:
      return c.value == derived;
    case fixtures::PrintAnomaly::OperatorMissing:
      return derived == c.value || derived == -c.value;
    case fixtures::PrintAnomaly::TermAbsent:
      return true;
  }
  return false;
}

std::optional<ConvolutionFormula> derive_fixture(std::int64_t a, std::int64_t b, std::string& why) {
  const std::int64_t level = a * b;
  const std::int64_t depth = default_verify_depth(level);
  try {
    const ModularBasis basis = load_fixture_basis(level, static_cast<std::size_t>(depth) + 1);
    return derive_formula(a, b, basis, depth);
  } catch (const Error& e) {
    why = e.what();
    return std::nullopt;
  }
}

void compare_expansion(const fixtures::PrintedExpansion& p, const ConvolutionFormula& f, Outcome& o) {
  const std::string id = "expansion" + pair_text(p.alpha, p.beta);
  for (const auto& [d, c] : p.sigma3) {
    const auto it = f.X.find(d);
    const BigRational derived = it == f.X.end() ? BigRational(0) : BigRational(240 * it->second);
    if (!printed_agrees(c, derived)) {
      o.fail(id + " sigma3(n/" + std::to_string(d) + "): printed " + to_string(c.value) + ", derived " +
             to_string(derived));
    }
  }
  for (std::size_t j = 0; j < p.cusp.size(); ++j) {
    const BigRational derived = j < f.Y.size() ? f.Y[j] : BigRational(0);
    if (!printed_agrees(p.cusp[j], derived)) {
      o.fail(id + " b" + std::to_string(j + 1) + ": printed " + to_string(p.cusp[j].value) + ", derived " +
             to_string(derived));
    }
  }
}

void compare_w(const fixtures::PrintedW& p, const WClosedForm& w, Outcome& o) {
  const std::string id = "W" + pair_text(p.alpha, p.beta);
  for (const auto& [d, c] : p.sigma3) {
    const auto it = w.sigma3.find(d);
    const BigRational derived = it == w.sigma3.end() ? BigRational(0) : it->second;
    if (!printed_agrees(c, derived)) {
      o.fail(id + " sigma3(n/" + std::to_string(d) + "): printed " + to_string(c.value) + ", derived " +
             to_string(derived));
    }
  }
  for (const auto& t : p.tail) {
    const auto it = std::find_if(w.tail.begin(), w.tail.end(), [&](const auto& x) { return x.divisor == t.divisor; });
    const BigRational derived = it == w.tail.end() ? BigRational(0) : it->per_n;
    if (derived != t.per_n) {
      o.fail(id + " n sigma(n/" + std::to_string(t.divisor) + "): printed " + to_string(t.per_n) + ", derived " +
             to_string(derived));
    }
  }
  for (std::size_t j = 0; j < p.cusp.size(); ++j) {
    const BigRational derived = j < w.cusp.size() ? w.cusp[j] : BigRational(0);
    if (!printed_agrees(p.cusp[j], derived)) {
      o.fail(id + " b" + std::to_string(j + 1) + ": printed " + to_string(p.cusp[j].value) + ", derived " +
             to_string(derived));
    }
  }
}

// Regresses printed expansions and W formulas of the given pairs against
// formulas derived on the fixture bases. Anomaly readings are accepted only
// when the fixture-derived W also matches brute force.
void fixture_regression(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, Outcome& o,
                        double per_level_limit) {
  std::string reproduced;
  for (const auto& [a, b] : pairs) {
    const auto start = Clock::now();
    const std::size_t before = o.problems.size();
    std::string why;
    const auto f = derive_fixture(a, b, why);
    if (!f) {
      o.fail(pair_text(a, b) + ": no formula on the fixture basis (" + why + ")");
      continue;
    }
    if (const auto* e = fixtures::find_expansion(a, b)) compare_expansion(*e, *f, o);
    if (const auto* w = fixtures::find_w(a, b)) compare_w(*w, closed_form(*f), o);
    const ModularBasis basis = load_fixture_basis(a * b, 201);
    for (std::int64_t n = 1; n <= 200; ++n) {
      if (evaluate_W(*f, basis, n) != brute_force_W(a, b, n)) {
        o.fail(pair_text(a, b) + ": fixture-derived W differs from brute force at n = " + std::to_string(n));
        break;
      }
    }
    const double secs = seconds_since(start);
    if (secs > per_level_limit) o.fail(pair_text(a, b) + " took " + std::to_string(secs) + " s");
    if (o.problems.size() == before) reproduced += " " + pair_text(a, b);
  }
  o.summary = "reproduced:" + (reproduced.empty() ? std::string(" none") : reproduced);
}

Outcome dimensions() {
  Outcome o;
  const auto start = Clock::now();
  struct Row {
    std::int64_t level, e4, s4;
  };
  // dim_E4 = 0 marks rows where only the cusp dimension is checked.
  for (const Row r : {Row{33, 4, 10}, Row{40, 8, 14}, Row{56, 8, 20}, Row{24, 0, 8}, Row{12, 0, 3}}) {
    const SpaceProfile p = profile(r.level);
    if ((r.e4 && p.dim_E4 != r.e4) || p.dim_S4 != r.s4) {
      o.fail("level " + std::to_string(r.level) + ": got (" + std::to_string(p.dim_E4) + "," +
             std::to_string(p.dim_S4) + ")");
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome tables() {
  Outcome o;
  const std::pair<std::int64_t, const fixtures::ExponentTable*> all[] = {
      {33, &fixtures::table_level33()}, {40, &fixtures::table_level40()}, {56, &fixtures::table_level56()}};
  std::ostringstream summary;
  for (const auto& [level, table] : all) {
    const auto start = Clock::now();
    SearchOptions opts;
    opts.bound = 10;
    const auto found = search_cusp_forms(level, 8, opts);
    const double secs = seconds_since(start);
    summary << level << ": " << found.size() << " results in " << secs << " s; ";
    if (secs >= 60.0) o.fail("level " + std::to_string(level) + " search took " + std::to_string(secs) + " s");
    std::vector<std::vector<int>> have;
    for (const auto& e : found) have.push_back(e.exponent_vector());
    std::sort(have.begin(), have.end());
    std::vector<std::int64_t> orders;
    for (std::size_t r = 0; r < table->rows.size(); ++r) {
      const EtaQuotient e = EtaQuotient::from_vector(level, table->rows[r]);
      const LigozatReport rep = ligozat_check(e);
      const std::string row = "level " + std::to_string(level) + " row " + std::to_string(r + 1);
      if (!rep.is_cusp || rep.weight_times_two != 8) {
        o.fail(row + " is not a weight-4 cusp form on Gamma_0(" + std::to_string(level) + ")");
      } else if (!std::binary_search(have.begin(), have.end(), e.exponent_vector())) {
        o.fail(row + " missing from search");
      }
      if (rep.is_cusp) orders.push_back(order_at_infinity(e));
    }
    if (level == 40) {
      for (std::int64_t k = 1; k <= 14; ++k) {
        if (std::find(orders.begin(), orders.end(), k) == orders.end()) {
          o.fail("level 40: no valid row of order " + std::to_string(k));
        }
      }
    }
  }
  o.summary = summary.str();
  return o;
}

Outcome coefficient_regression() {
  Outcome o;
  fixture_regression({{1, 33}, {3, 11}, {1, 40}, {5, 8}, {1, 56}, {7, 8}}, o, 120.0);
  return o;
}

Outcome oracle_equivalence(FormulaProvider& provider) {
  Outcome o;
  const auto start = Clock::now();
  int checked = 0;
  for (std::int64_t level : {10, 11, 12, 15, 24, 33, 40, 56}) {
    for (std::int64_t a : divisors(level)) {
      const std::int64_t b = level / a;
      if (a >= b || std::gcd(a, b) != 1) continue;
      ++checked;
      try {
        const auto entry = provider.formula(a, b);
        const auto basis = provider.basis(level);
        for (std::int64_t n = 1; n <= 200; ++n) {
          if (evaluate_W(entry->formula, *entry->basis, n) != brute_force_W(a, b, n)) {
            o.fail(pair_text(a, b) + " differs from brute force at n = " + std::to_string(n));
            break;
          }
        }
        const std::int64_t depth = sturm_bound(level);
        const QSeries target = squared_difference(a, b, static_cast<std::size_t>(depth) + 1);
        for (std::int64_t n = 1; n <= depth; ++n) {
          if (identity_coefficient(entry->formula, *entry->basis, n) != target[static_cast<std::size_t>(n)]) {
            o.fail(pair_text(a, b) + " identity fails at q^" + std::to_string(n));
            break;
          }
        }
        if (entry->formula.verified_to < depth) o.fail(pair_text(a, b) + " verified below the Sturm bound");
      } catch (const Error& e) {
        o.fail(pair_text(a, b) + ": " + e.what());
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 300.0) o.fail("took " + std::to_string(secs) + " s");
  o.summary = std::to_string(checked) + " pairs in " + std::to_string(secs) + " s";
  return o;
}

Outcome revisits() {
  Outcome o;
  fixture_regression({{1, 10}, {2, 5}, {1, 12}, {3, 4}, {1, 15}, {3, 5}, {1, 24}, {3, 8}}, o, 120.0);
  for (std::int64_t a = 1; a <= 5; ++a) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      if (diagonal_W(a, n) != BigRational(brute_force_W(a, a, n))) {
        o.fail("W" + pair_text(a, a) + " differs from brute force at n = " + std::to_string(n));
        break;
      }
    }
  }
  return o;
}

Outcome representations(FormulaProvider& provider) {
  Outcome o;
  auto check = [&](Form form, const PairSet& set) {
    for (const auto& [a, b] : set.pairs) {
      for (std::int64_t n = 0; n <= 100; ++n) {
        const Natural got = form == Form::Quad ? count_N(a, b, n, provider) : count_R(a, b, n, provider);
        if (got != rep_oracle(form, a, b, n)) {
          o.fail(to_string(form) + pair_text(a, b) + " differs from the lattice oracle at n = " + std::to_string(n));
          break;
        }
      }
    }
  };
  using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  const PairSet q40 = omega4(40), q56 = omega4(56), h33 = omega3(33);
  if (q40.pairs != Pairs{{1, 10}, {2, 5}}) o.fail("omega4(40) wrong");
  if (q56.pairs != Pairs{{1, 14}, {2, 7}}) o.fail("omega4(56) wrong");
  if (h33.pairs != Pairs{{1, 11}}) o.fail("omega3(33) wrong");
  check(Form::Quad, q40);
  check(Form::Quad, q56);
  check(Form::Hex, h33);
  for (std::int64_t n = 1; n <= 100; ++n) {
    const Integer closed = 16 * sigma(3, n) - 32 * sigma_scaled(3, n, 2) + 256 * sigma_scaled(3, n, 4);
    const Natural oracle = rep_oracle(Form::Quad, 1, 1, n);
    if (closed != oracle || count_N(1, 1, n, provider) != oracle) {
      o.fail("N(1,1) differs from the eight-squares count at n = " + std::to_string(n));
      break;
    }
  }
  if (omega4(120).pairs != Pairs{{1, 30}, {2, 15}, {3, 10}, {5, 6}}) o.fail("omega4(120) wrong");
  if (omega3(120).pairs != Pairs{{1, 40}, {5, 8}}) o.fail("omega3(120) wrong");
  return o;
}

Outcome classical_identities() {
  Outcome o;
  const std::size_t T = 201;
  const QSeries L = eisenstein_L(1, T);
  const QSeries L2 = mul(L, L);
  if (L2[0] != 1) o.fail("L^2 constant term");
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(T); ++n) {
    const BigRational expect = BigRational(240 * sigma(3, n) - 288 * n * sigma(1, n));
    if (L2[static_cast<std::size_t>(n)] != expect) {
      o.fail("L^2 identity fails at q^" + std::to_string(n));
      break;
    }
  }
  for (std::int64_t n = 0; n <= 100; ++n) {
    if (r4(n) != r4_enumerated(n)) o.fail("r4 differs from enumeration at n = " + std::to_string(n));
    if (s4(n) != s4_enumerated(n)) o.fail("s4 differs from enumeration at n = " + std::to_string(n));
  }
  return o;
}

Outcome level11(FormulaProvider& provider) {
  Outcome o;
  const AuditItem item = audit_level11(provider, 200);
  o.summary = to_string(item.verdict) + ": " + item.detail;
  if (item.verdict != Verdict::Pass && item.verdict != Verdict::DocumentedDiscrepancy) o.fail("no definitive verdict");
  // The verdict must not rest on the published generators being weight 4.
  for (const auto& g : fixtures::basis_generators(11)) {
    const int w = ligozat_check(g.eta).weight_times_two;
    if (w != 8 && item.detail.find(g.label + " has weight " + std::to_string(w / 2)) == std::string::npos) {
      o.fail(g.label + " has weight " + std::to_string(w / 2) + " but the verdict does not say so");
    }
  }
  return o;
}

}  // namespace

int main() {
  FormulaProvider provider;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dimension reproduction", dimensions},
      {"table regeneration", tables},
      {"coefficient regression on fixture bases (33, 40, 56)", coefficient_regression},
      {"oracle equivalence of derived formulas", [&] { return oracle_equivalence(provider); }},
      {"fixture-basis W formulas at levels 10-24 and diagonal W", revisits},
      {"representation formulas and pair sets", [&] { return representations(provider); }},
      {"L^2, r4 and s4 identities", classical_identities},
      {"level-11 adjudication", [&] { return level11(provider); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << secs << " s]";
    if (!o.summary.empty()) std::cout << "  " << o.summary;
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(o.problems.size(), 12);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "    " << o.problems[k] << "\n";
    if (o.problems.size() > shown) std::cout << "    ... " << o.problems.size() - shown << " more\n";
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
