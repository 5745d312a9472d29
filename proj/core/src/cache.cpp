#include "divconv/cache.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <tuple>

#include <unistd.h>

#include <json.hpp>

#include "divconv/checksum.hpp"
#include "divconv/errors.hpp"

namespace divconv {

using nlohmann::json;

namespace {

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::EtaQuotient:
      return "eta";
    case GeneratorKind::DeclaredFixture:
      return "declared";
    case GeneratorKind::EisensteinProduct:
      return "eisenstein-product";
  }
  return "eta";
}

GeneratorKind kind_from(const std::string& s) {
  if (s == "eta") return GeneratorKind::EtaQuotient;
  if (s == "declared") return GeneratorKind::DeclaredFixture;
  if (s == "eisenstein-product") return GeneratorKind::EisensteinProduct;
  throw CacheError("unknown generator kind '" + s + "'");
}

json eta_to_json(const EtaQuotient& e) {
  json exps = json::array();
  for (const auto& [d, r] : e.exponents()) exps.push_back({d, r});
  return {{"level", e.level()}, {"exponents", exps}};
}

EtaQuotient eta_from_json(const json& j) {
  std::map<std::int64_t, int> m;
  for (const auto& pair : j.at("exponents")) m[pair.at(0).get<std::int64_t>()] = pair.at(1).get<int>();
  return EtaQuotient(j.at("level").get<std::int64_t>(), std::move(m));
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json envelope(std::string_view kind, std::int64_t level, const json& payload) {
  return {{"format", "divconv-cache"},
          {"version", kCacheFormatVersion},
          {"kind", kind},
          {"level", level},
          {"created", now_utc()},
          {"checksum", fnv1a64_hex(payload.dump())},
          {"payload", payload}};
}

const json& open_envelope(const json& j, std::string_view kind) {
  if (j.value("format", "") != "divconv-cache") throw CacheError("not a divconv cache record");
  if (j.value("version", 0) != kCacheFormatVersion) {
    throw CacheError("cache version " + std::to_string(j.value("version", 0)) + " is not supported");
  }
  if (j.value("kind", "") != kind) throw CacheError("expected a " + std::string(kind) + " record");
  const json& payload = j.at("payload");
  if (j.value("checksum", "") != fnv1a64_hex(payload.dump())) throw CacheError("cache checksum mismatch");
  return payload;
}

json basis_payload(const ModularBasis& b) {
  json gens = json::array();
  for (const auto& g : b.cusp()) {
    json jg = {{"kind", kind_name(g.kind)}, {"label", g.label}, {"eta", eta_to_json(g.eta)}};
    if (g.kind == GeneratorKind::EisensteinProduct) jg["shift"] = g.shift;
    gens.push_back(jg);
  }
  return {{"level", b.level()},
          {"eisenstein", b.eisenstein()},
          {"cusp", gens},
          {"selection", to_string(b.selection())},
          {"source", to_string(b.source())},
          {"basis_checksum", b.checksum()}};
}

json formula_payload(const ConvolutionFormula& f) {
  json x = json::array();
  for (const auto& [d, v] : f.X) x.push_back({d, to_string(v)});
  json y = json::array();
  for (const auto& v : f.Y) y.push_back(to_string(v));
  return {{"alpha", f.alpha},     {"beta", f.beta},         {"level", f.level},
          {"X", x},               {"Y", y},                 {"basis_ref", f.basis_ref},
          {"verified_to", f.verified_to}, {"sample_indices", f.sample_indices}};
}

ConvolutionFormula formula_from_payload(const json& j) {
  ConvolutionFormula f;
  f.alpha = j.at("alpha").get<std::int64_t>();
  f.beta = j.at("beta").get<std::int64_t>();
  f.level = j.at("level").get<std::int64_t>();
  for (const auto& pair : j.at("X")) f.X[pair.at(0).get<std::int64_t>()] = parse_rational(pair.at(1).get<std::string>());
  for (const auto& v : j.at("Y")) f.Y.push_back(parse_rational(v.get<std::string>()));
  f.basis_ref = j.at("basis_ref").get<std::string>();
  f.verified_to = j.at("verified_to").get<std::int64_t>();
  f.sample_indices = j.at("sample_indices").get<std::vector<std::int64_t>>();
  return f;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache text: ") + e.what());
  }
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  static std::atomic<unsigned> counter{0};
  const auto tmp = p.parent_path() / (p.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                                      std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw CacheError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, p, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError("cannot rename into " + p.string());
  }
}

}  // namespace

std::string serialize_basis(const ModularBasis& basis) {
  return envelope("basis", basis.level(), basis_payload(basis)).dump(2);
}

ModularBasis deserialize_basis(std::string_view text, std::size_t precision) {
  const json j = parse_text(text);
  try {
    const json& p = open_envelope(j, "basis");
    std::vector<CuspGenerator> gens;
    for (const auto& jg : p.at("cusp")) {
      CuspGenerator g;
      g.kind = kind_from(jg.at("kind").get<std::string>());
      g.label = jg.at("label").get<std::string>();
      g.eta = eta_from_json(jg.at("eta"));
      if (g.kind == GeneratorKind::EisensteinProduct) g.shift = jg.at("shift").get<std::int64_t>();
      gens.push_back(std::move(g));
    }
    const auto sel = p.at("selection").get<std::string>() == "case1" ? SelectionCase::Case1 : SelectionCase::Case2;
    const auto src = p.at("source").get<std::string>() == "fixture" ? BasisSource::Fixture : BasisSource::Search;
    ModularBasis b(p.at("level").get<std::int64_t>(), std::move(gens), precision, sel, src);
    if (b.checksum() != p.at("basis_checksum").get<std::string>()) {
      throw CacheError("basis coefficients do not match the stored checksum at level " + std::to_string(b.level()));
    }
    return b;
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed basis record: ") + e.what());
  }
}

std::string serialize_formula(const ConvolutionFormula& f) {
  return envelope("formula", f.level, formula_payload(f)).dump(2);
}

ConvolutionFormula deserialize_formula(std::string_view text) {
  const json j = parse_text(text);
  try {
    return formula_from_payload(open_envelope(j, "formula"));
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed formula record: ") + e.what());
  }
}

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> CacheStore::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("DIVCONV_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::filesystem::path CacheStore::path_for(std::string_view kind, std::int64_t level) const {
  return dir_ / (std::string(kind) + "-" + std::to_string(level) + ".json");
}

std::optional<ModularBasis> CacheStore::load_basis(std::int64_t level, std::size_t precision) const {
  std::lock_guard lock(mu_);
  auto text = read_file(path_for("basis", level));
  if (!text) return std::nullopt;
  return deserialize_basis(*text, precision);
}

void CacheStore::store_basis(const ModularBasis& basis) {
  std::lock_guard lock(mu_);
  write_atomic(path_for("basis", basis.level()), serialize_basis(basis));
}

std::vector<ConvolutionFormula> CacheStore::load_formulas(std::int64_t level) const {
  std::lock_guard lock(mu_);
  auto text = read_file(path_for("formula", level));
  if (!text) return {};
  const json j = parse_text(*text);
  try {
    std::vector<ConvolutionFormula> out;
    for (const auto& p : open_envelope(j, "formula").at("formulas")) out.push_back(formula_from_payload(p));
    return out;
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed formula file: ") + e.what());
  }
}

std::optional<ConvolutionFormula> CacheStore::load_formula(std::int64_t alpha, std::int64_t beta,
                                                           std::string_view basis_ref) const {
  for (auto& f : load_formulas(alpha * beta)) {
    if (f.alpha == alpha && f.beta == beta && f.basis_ref == basis_ref) return f;
  }
  return std::nullopt;
}

void CacheStore::store_formula(const ConvolutionFormula& f) {
  std::vector<ConvolutionFormula> all;
  try {
    all = load_formulas(f.level);
  } catch (const CacheError&) {
    all.clear();  // unreadable file is replaced
  }
  std::erase_if(all, [&](const ConvolutionFormula& g) {
    return g.alpha == f.alpha && g.beta == f.beta && g.basis_ref == f.basis_ref;
  });
  all.push_back(f);
  std::sort(all.begin(), all.end(), [](const ConvolutionFormula& a, const ConvolutionFormula& b) {
    return std::tie(a.alpha, a.beta, a.basis_ref) < std::tie(b.alpha, b.beta, b.basis_ref);
  });
  json list = json::array();
  for (const auto& g : all) list.push_back(formula_payload(g));
  std::lock_guard lock(mu_);
  write_atomic(path_for("formula", f.level), envelope("formula", f.level, json{{"formulas", list}}).dump(2));
}

}  // namespace divconv
