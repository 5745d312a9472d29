#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "divconv/cache.hpp"
#include "divconv/convolution.hpp"
#include "divconv/errors.hpp"
#include "divconv/provider.hpp"
#include "divconv/spaces.hpp"

using namespace divconv;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("divconv-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cache, BasisRoundTrip) {
  for (std::int64_t level : {10, 24, 33}) {
    const ModularBasis b = build_search_basis(level, 120, SearchOptions{});
    const ModularBasis back = deserialize_basis(serialize_basis(b), 120);
    EXPECT_EQ(back.id(), b.id());
    EXPECT_EQ(nlohmann::json::parse(serialize_basis(back))["payload"],
              nlohmann::json::parse(serialize_basis(b))["payload"]);
    ASSERT_EQ(back.cusp().size(), b.cusp().size());
    for (std::size_t j = 0; j < b.cusp().size(); ++j) {
      for (std::int64_t n = 1; n <= 120; ++n) ASSERT_EQ(back.coefficient(j, n), b.coefficient(j, n));
    }
  }
}

TEST(Cache, FormulaRoundTrip) {
  const ModularBasis b = build_search_basis(15, 201, SearchOptions{});
  for (auto [a, c] : {std::pair{1, 15}, {3, 5}}) {
    const ConvolutionFormula f = derive_formula(a, c, b);
    EXPECT_EQ(deserialize_formula(serialize_formula(f)), f);
  }
}

TEST(Cache, CorruptRecordsAreRejected) {
  EXPECT_THROW(deserialize_formula("{not json"), CacheError);
  const ModularBasis b = build_search_basis(10, 60, SearchOptions{});
  const std::string text = serialize_basis(b);
  const auto pos = text.find("\"basis_checksum\"");
  ASSERT_NE(pos, std::string::npos);
  std::string renamed = text;
  renamed.replace(pos, 16, "\"basis_checksun\"");
  EXPECT_THROW(deserialize_basis(renamed, 60), CacheError);
  // Swapping two generators changes the coefficients, so the checksum must catch it.
  auto j = nlohmann::json::parse(text);
  auto& cusp = j["payload"]["cusp"];
  ASSERT_GE(cusp.size(), 2u);
  std::swap(cusp[0]["eta"], cusp[1]["eta"]);
  EXPECT_THROW(deserialize_basis(j.dump(), 60), CacheError);
  EXPECT_NO_THROW(deserialize_basis(text, 60));
}

TEST(Cache, StoreUsesKindLevelFileNames) {
  const fs::path dir = fresh_dir("store");
  CacheStore store(dir);
  const ModularBasis b = build_search_basis(14, 120, SearchOptions{});
  store.store_basis(b);
  store.store_formula(derive_formula(2, 7, b));
  EXPECT_TRUE(fs::exists(dir / "basis-14.json"));
  EXPECT_TRUE(fs::exists(dir / "formula-14.json"));
  const auto loaded = store.load_basis(14, 120);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->id(), b.id());
  EXPECT_EQ(store.load_formulas(14).size(), 1u);
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".json") << e.path();
  fs::remove_all(dir);
}

TEST(Cache, DirectoryResolution) {
  ::setenv("DIVCONV_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(CacheStore::resolve_dir(std::string("/tmp/from-flag")), fs::path("/tmp/from-flag"));
  EXPECT_EQ(CacheStore::resolve_dir(std::nullopt), fs::path("/tmp/from-env"));
  ::unsetenv("DIVCONV_CACHE");
  EXPECT_FALSE(CacheStore::resolve_dir(std::nullopt).has_value());
}

TEST(Provider, SecondProviderReadsCache) {
  const fs::path dir = fresh_dir("provider");
  ProviderOptions o;
  o.policy = BasisPolicy::Search;
  o.cache_dir = dir;
  Natural first;
  {
    FormulaProvider p(o);
    first = p.W(1, 14, 150);
  }
  FormulaProvider p(o);
  EXPECT_EQ(p.W(1, 14, 150), first);
  EXPECT_EQ(first, brute_force_W(1, 14, 150));
  bool hit = false;
  for (const auto& e : p.events()) hit = hit || e.find("loaded from cache") != std::string::npos;
  EXPECT_TRUE(hit);
  fs::remove_all(dir);
}

TEST(Provider, ConcurrentCallersShareOneFormula) {
  FormulaProvider p;
  std::vector<std::shared_ptr<const FormulaEntry>> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) threads.emplace_back([&, i] { got[i] = p.formula(2, 5); });
  for (auto& t : threads) t.join();
  for (const auto& g : got) EXPECT_EQ(g.get(), got[0].get());
}

TEST(Provider, DispatchCoversAllShapes) {
  FormulaProvider p;
  for (auto [a, b] : {std::pair{1, 1}, {3, 3}, {2, 4}, {5, 2}, {6, 10}, {1, 11}}) {
    for (std::int64_t n = 0; n <= 80; ++n) ASSERT_EQ(p.W(a, b, n), brute_force_W(a, b, n)) << a << "," << b;
  }
  EXPECT_THROW(p.formula(1, 100), UnsupportedLevelError);
}

TEST(Provider, FixturePolicyRejectsBrokenFixture) {
  ProviderOptions o;
  o.policy = BasisPolicy::Fixture;
  FormulaProvider p(o);
  EXPECT_THROW(p.formula(1, 33), Error);
  EXPECT_EQ(p.W(1, 12, 90), brute_force_W(1, 12, 90));
}
