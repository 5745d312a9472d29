#include "cli.hpp"

#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divconv/audit.hpp"
#include "divconv/convolution.hpp"
#include "divconv/errors.hpp"
#include "divconv/eta.hpp"
#include "divconv/provider.hpp"
#include "divconv/representation.hpp"
#include "divconv/spaces.hpp"

namespace divconv::cli {

using nlohmann::json;

namespace {

struct Globals {
  std::optional<std::string> cache_dir;
  int jobs = 1;
  bool machine = false;
};

std::string q(const BigRational& r) { return to_string(r); }

std::string sigma_arg(std::int64_t d) { return d == 1 ? "n" : "n/" + std::to_string(d); }

ProviderOptions provider_options(const Globals& g, bool use_fixture, std::int64_t verify, std::size_t terms) {
  ProviderOptions o;
  o.policy = use_fixture ? BasisPolicy::Fixture : BasisPolicy::Auto;
  o.search.jobs = g.jobs;
  o.verify_depth = verify;
  o.precision = terms;
  o.cache_dir = CacheStore::resolve_dir(g.cache_dir);
  return o;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_dims(std::int64_t level, const Globals& g, std::ostream& out) {
  if (level < 1) throw DomainError("level must be >= 1");
  const SpaceProfile p = profile(level);
  const std::int64_t sturm = sturm_bound(level);
  if (g.machine) {
    emit(out, {{"level", p.level},
               {"index_mu", p.index_mu},
               {"eps2", p.eps2},
               {"eps3", p.eps3},
               {"cusp_count", p.cusp_count},
               {"genus", p.genus},
               {"dim_E4", p.dim_E4},
               {"dim_S4", p.dim_S4},
               {"dim_M4", p.dim_M4},
               {"sturm_bound", sturm},
               {"in_class", classify_level(level).in_class}});
    return kOk;
  }
  out << "level " << p.level << "\n"
      << "  index mu   " << p.index_mu << "\n"
      << "  eps2 eps3  " << p.eps2 << " " << p.eps3 << "\n"
      << "  cusps      " << p.cusp_count << "\n"
      << "  genus      " << p.genus << "\n"
      << "  dim_E4=" << p.dim_E4 << " dim_S4=" << p.dim_S4 << " dim_M4=" << p.dim_M4 << "\n"
      << "  sturm bound (k=4) " << sturm << "\n";
  if (!classify_level(level).in_class) out << "  note: outside 2^nu * (odd squarefree), nu <= 3\n";
  return kOk;
}

int cmd_search(std::int64_t level, int bound, std::int64_t max_order, const Globals& g, std::ostream& out) {
  if (level < 1) throw DomainError("level must be >= 1");
  SearchOptions o;
  o.bound = bound;
  o.max_order = max_order;
  o.jobs = g.jobs;
  const auto found = search_cusp_forms(level, 8, o);
  const auto divs = divisors(level);
  if (g.machine) {
    json rows = json::array();
    for (const auto& e : found) {
      rows.push_back({{"exponents", e.exponent_vector()}, {"order", order_at_infinity(e)}, {"label", e.label()}});
    }
    emit(out, {{"level", level}, {"bound", bound}, {"divisors", divs}, {"results", rows}});
    return kOk;
  }
  out << found.size() << " weight-4 cusp eta quotients at level " << level << " (|r| <= " << bound << ")\n";
  if (found.empty()) return kOk;
  out << std::setw(6) << "order";
  for (auto d : divs) out << std::setw(5) << d;
  out << "\n";
  for (const auto& e : found) {
    out << std::setw(6) << order_at_infinity(e);
    for (int r : e.exponent_vector()) out << std::setw(5) << r;
    out << "\n";
  }
  return kOk;
}

std::string kind_text(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::EtaQuotient:
      return "eta";
    case GeneratorKind::DeclaredFixture:
      return "declared";
    case GeneratorKind::EisensteinProduct:
      return "eisenstein-product";
  }
  return "?";
}

json basis_json(const ModularBasis& b, std::size_t shown) {
  json gens = json::array();
  for (std::size_t j = 0; j < b.cusp().size(); ++j) {
    json coeffs = json::array();
    for (std::size_t n = 1; n <= shown; ++n) coeffs.push_back(q(b.coefficient(j, static_cast<std::int64_t>(n))));
    gens.push_back({{"label", b.cusp()[j].label}, {"kind", kind_text(b.cusp()[j].kind)}, {"coefficients", coeffs}});
  }
  return {{"id", b.id()},
          {"level", b.level()},
          {"source", to_string(b.source())},
          {"selection", to_string(b.selection())},
          {"eisenstein", b.eisenstein()},
          {"precision", b.precision()},
          {"cusp", gens}};
}

int cmd_basis(std::int64_t level, bool use_fixture, std::size_t terms, const Globals& g, std::ostream& out) {
  if (level < 1) throw DomainError("level must be >= 1");
  FormulaProvider provider(provider_options(g, use_fixture, 0, terms));
  // Without --use-fixture, show the basis formulas at this level actually use,
  // which is the search basis whenever the embedded one fails to verify.
  const auto b = use_fixture || level == 1 ? provider.basis(level) : provider.formula(1, level)->basis;
  const std::size_t shown = std::min<std::size_t>(12, b->precision() - 1);
  if (g.machine) {
    emit(out, basis_json(*b, shown));
    return kOk;
  }
  out << "basis " << b->id() << " (" << to_string(b->source()) << ", " << to_string(b->selection()) << ")\n";
  out << "  Eisenstein: ";
  for (auto t : b->eisenstein()) out << "M(q^" << t << ") ";
  out << "\n";
  for (std::size_t j = 0; j < b->cusp().size(); ++j) {
    out << "  b" << j + 1 << " = " << b->cusp()[j].label << "\n     ";
    for (std::size_t n = 1; n <= shown; ++n) out << " " << q(b->coefficient(j, static_cast<std::int64_t>(n)));
    out << " ...\n";
  }
  for (const auto& e : provider.events()) out << "  note: " << e << "\n";
  return kOk;
}

// First n in 1..depth where f(n) differs from brute force, if any.
template <class F>
std::optional<std::int64_t> brute_force_mismatch(std::int64_t a, std::int64_t b, std::int64_t depth, F&& f) {
  for (std::int64_t n = 1; n <= depth; ++n) {
    if (f(n) != brute_force_W(a, b, n)) return n;
  }
  return std::nullopt;
}

int cmd_convsum(std::int64_t alpha, std::int64_t beta, std::size_t terms, std::int64_t verify, bool use_fixture,
                const Globals& g, std::ostream& out) {
  if (alpha < 1 || beta < 1) throw DomainError("alpha and beta must be >= 1");
  if (verify < 0) throw DomainError("--verify must be >= 0");
  const std::int64_t gcd = std::gcd(alpha, beta);
  const std::int64_t a = std::min(alpha, beta) / gcd;
  const std::int64_t b = std::max(alpha, beta) / gcd;
  json report = {{"alpha", alpha}, {"beta", beta}};
  std::ostringstream text;
  if (gcd > 1) {
    text << "W_(" << alpha << "," << beta << ")(n) = W_(" << a << "," << b << ")(n/" << gcd << ")\n";
    report["reduced"] = {{"alpha", a}, {"beta", b}, {"divisor", gcd}};
  }

  std::optional<std::int64_t> bad;
  if (a == b) {
    text << "W_(" << a << "," << a << ")(n) = 5/12 sigma3(" << sigma_arg(a) << ") + (1/12 - " << q(BigRational(1, 2 * a))
         << " n) sigma(" << sigma_arg(a) << ")\n";
    report["diagonal"] = {{"sigma3", "5/12"}, {"constant", "1/12"}, {"per_n", q(-BigRational(1, 2 * a))}, {"divisor", a}};
    bad = brute_force_mismatch(alpha, beta, verify, [&](std::int64_t n) -> Natural {
      if (n % gcd != 0) return 0;
      return diagonal_W(a, n / gcd).get_num();
    });
  } else {
    FormulaProvider provider(provider_options(g, use_fixture, 0, terms));
    const auto entry = provider.formula(a, b);
    const auto& f = entry->formula;
    const auto& w = entry->closed;
    text << "W_(" << a << "," << b << ")(n) on basis " << entry->basis->id() << " ("
         << to_string(entry->basis->source()) << ", " << to_string(entry->basis->selection())
         << "), identity checked to q^" << f.verified_to << "\n";
    text << "sigma3 terms\n";
    json s3 = json::object();
    for (const auto& [d, c] : w.sigma3) {
      text << "  " << std::left << std::setw(16) << ("sigma3(" + sigma_arg(d) + ")") << std::right << q(c) << "\n";
      s3[std::to_string(d)] = q(c);
    }
    text << "sigma terms\n";
    json tail = json::array();
    for (const auto& t : w.tail) {
      text << "  (" << q(t.constant) << " " << (t.per_n < 0 ? "- " : "+ ") << q(abs(t.per_n)) << " n) sigma("
           << sigma_arg(t.divisor) << ")\n";
      tail.push_back({{"divisor", t.divisor}, {"constant", q(t.constant)}, {"per_n", q(t.per_n)}});
    }
    text << "cusp terms\n";
    json cusp = json::array();
    for (std::size_t j = 0; j < w.cusp.size(); ++j) {
      text << "  " << std::left << std::setw(18) << q(w.cusp[j]) << std::right << " b" << j + 1 << " = "
           << entry->basis->cusp()[j].label << "\n";
      cusp.push_back({{"coefficient", q(w.cusp[j])}, {"generator", entry->basis->cusp()[j].label}});
    }
    json X = json::object();
    for (const auto& [d, x] : f.X) X[std::to_string(d)] = q(x);
    json Y = json::array();
    for (const auto& y : f.Y) Y.push_back(q(y));
    report["level"] = a * b;
    report["basis"] = entry->basis->id();
    report["verified_to"] = f.verified_to;
    report["sigma3"] = s3;
    report["tail"] = tail;
    report["cusp"] = cusp;
    report["X"] = X;
    report["Y"] = Y;
    bad = brute_force_mismatch(alpha, beta, verify, [&](std::int64_t n) { return provider.W(alpha, beta, n); });
    for (const auto& e : provider.events()) text << "note: " << e << "\n";
  }
  report["brute_force_checked_to"] = verify;
  report["brute_force_ok"] = !bad.has_value();
  if (bad) {
    text << "brute force check FAILED at n = " << *bad << "\n";
  } else if (verify > 0) {
    text << "brute force check: n = 1.." << verify << " agree\n";
  }
  if (g.machine) {
    emit(out, report);
  } else {
    out << text.str();
  }
  return bad ? kInternal : kOk;
}

int cmd_repnum(const std::string& form_name, std::int64_t a, std::int64_t b, std::int64_t n, const Globals& g,
               std::ostream& out) {
  Form form;
  if (form_name == "quad") {
    form = Form::Quad;
  } else if (form_name == "hex") {
    form = Form::Hex;
  } else {
    throw DomainError("--form must be quad or hex");
  }
  if (n < 0) throw DomainError("n must be >= 0");
  FormulaProvider provider(provider_options(g, false, 0, 0));
  const RepFormula f = rep_formula(form, a, b);
  const Natural count = form == Form::Quad ? count_N(a, b, n, provider) : count_R(a, b, n, provider);
  json terms = json::array();
  std::ostringstream text;
  text << (form == Form::Quad ? "N" : "R") << "_(" << a << "," << b << ")(" << n << ") = " << count.get_str() << "\n";
  for (const auto& s : f.sigma_terms) {
    const Natural v = n > 0 ? sigma_scaled(1, n, s.divisor) : Natural(0);
    text << "  " << std::setw(6) << s.multiplier << " * sigma(" << sigma_arg(s.divisor) << ") = " << s.multiplier
         << " * " << v.get_str() << "\n";
    terms.push_back({{"kind", "sigma"}, {"multiplier", s.multiplier}, {"divisor", s.divisor}, {"value", v.get_str()}});
  }
  for (const auto& c : f.w_terms) {
    const Natural v = n % c.divisor == 0 ? provider.W(c.alpha, c.beta, n / c.divisor) : Natural(0);
    text << "  " << std::setw(6) << c.multiplier << " * W_(" << c.alpha << "," << c.beta << ")(" << sigma_arg(c.divisor)
         << ") = " << c.multiplier << " * " << v.get_str() << "\n";
    terms.push_back({{"kind", "W"},
                     {"multiplier", c.multiplier},
                     {"alpha", c.alpha},
                     {"beta", c.beta},
                     {"divisor", c.divisor},
                     {"value", v.get_str()}});
  }
  if (g.machine) {
    emit(out, {{"form", to_string(form)}, {"a", a}, {"b", b}, {"n", n}, {"count", count.get_str()}, {"terms", terms}});
  } else {
    out << text.str();
  }
  return kOk;
}

int cmd_verify(const Globals& g, std::ostream& out) {
  FormulaProvider provider(provider_options(g, false, 0, 0));
  AuditOptions o;
  o.search.jobs = g.jobs;
  if (!g.machine) {
    o.on_item = [&](const AuditItem& i) {
      out << std::left << std::setw(23) << to_string(i.verdict) << std::right << i.id << "  " << i.detail << std::endl;
    };
  }
  const auto items = run_audit(provider, o);
  std::map<std::string, int> counts;
  for (const auto& i : items) ++counts[to_string(i.verdict)];
  if (g.machine) {
    json list = json::array();
    for (const auto& i : items) list.push_back({{"id", i.id}, {"verdict", to_string(i.verdict)}, {"detail", i.detail}});
    emit(out, {{"items", list}, {"counts", counts}, {"passed", audit_passed(items)}});
  } else {
    out << "summary:";
    for (const auto& [k, v] : counts) out << " " << k << "=" << v;
    out << "\n";
  }
  return audit_passed(items) ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact convolution sums of divisor functions via modular-form bases"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $DIVCONV_CACHE, else no cache)");
  app.add_option("--jobs", g.jobs, "Worker threads for the eta-quotient search")->check(CLI::Range(1, 256));
  app.add_flag("--machine", g.machine, "JSON output with rationals as \"p/q\" strings");

  std::int64_t level = 0;
  auto* dims = app.add_subcommand("dims", "Dimensions of M4, E4 and S4 for Gamma_0(N)");
  dims->add_option("N", level)->required();

  int bound = 10;
  std::int64_t max_order = 0;
  auto* search = app.add_subcommand("search-cusp", "Weight-4 cusp eta quotients of level N");
  search->add_option("N", level)->required();
  search->add_option("--bound", bound, "Largest |r_delta|")->check(CLI::PositiveNumber);
  search->add_option("--max-order", max_order, "Largest order at infinity (default dim S4)")->check(CLI::NonNegativeNumber);

  bool use_fixture = false;
  std::size_t terms = 0;
  auto* basis = app.add_subcommand("basis", "Basis of M4(Gamma_0(N)) used for convolution sums");
  basis->add_option("N", level)->required();
  basis->add_flag("--use-fixture", use_fixture, "Use the embedded published basis");
  basis->add_option("--terms", terms, "Minimum number of q-expansion terms");

  std::int64_t alpha = 0, beta = 0, verify = 200;
  auto* convsum = app.add_subcommand("convsum", "Closed form of W_(alpha,beta)(n)");
  convsum->add_option("alpha", alpha)->required();
  convsum->add_option("beta", beta)->required();
  convsum->add_option("--terms", terms, "Minimum number of q-expansion terms");
  convsum->add_option("--verify", verify, "Check against brute force for n = 1..V")->check(CLI::NonNegativeNumber);
  convsum->add_flag("--use-fixture", use_fixture, "Use the embedded published basis only");

  std::string form = "quad";
  std::int64_t a = 0, b = 0, n = 0;
  auto* repnum = app.add_subcommand("repnum", "Representation number of an octonary form");
  repnum->add_option("--form", form, "quad or hex")->check(CLI::IsMember({"quad", "hex"}));
  repnum->add_option("a", a)->required();
  repnum->add_option("b", b)->required();
  repnum->add_option("n", n)->required();

  auto* verify_paper = app.add_subcommand("verify-paper", "Audit the embedded published data against oracles");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dims) return cmd_dims(level, g, out);
    if (*search) return cmd_search(level, bound, max_order, g, out);
    if (*basis) return cmd_basis(level, use_fixture, terms, g, out);
    if (*convsum) return cmd_convsum(alpha, beta, terms, verify, use_fixture, g, out);
    if (*repnum) return cmd_repnum(form, a, b, n, g, out);
    if (*verify_paper) return cmd_verify(g, out);
  } catch (const UnsupportedLevelError& e) {
    err << "unsupported level: " << e.what() << "\n";
    return kUnsupportedLevel;
  } catch (const UnknownFixtureError& e) {
    err << "unsupported level: " << e.what() << "\n";
    return kUnsupportedLevel;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace divconv::cli
