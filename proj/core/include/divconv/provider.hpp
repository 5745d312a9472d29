#pragma once

#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "divconv/cache.hpp"
#include "divconv/convolution.hpp"
#include "divconv/eta.hpp"
#include "divconv/spaces.hpp"

namespace divconv {

/// Anything that can answer W_(alpha,beta)(n) for alpha, beta >= 1.
/// Returns 0 for n <= 0.
class WSource {
 public:
  virtual ~WSource() = default;
  virtual Natural W(std::int64_t alpha, std::int64_t beta, std::int64_t n) = 0;
};

class BruteForceWSource final : public WSource {
 public:
  Natural W(std::int64_t alpha, std::int64_t beta, std::int64_t n) override;
};

enum class BasisPolicy {
  Auto,     // embedded fixture when one exists and works, else search
  Fixture,  // embedded fixture only
  Search,   // exhaustive search only
};

struct ProviderOptions {
  BasisPolicy policy = BasisPolicy::Auto;
  SearchOptions search;
  /// 0 selects default_verify_depth(level).
  std::int64_t verify_depth = 0;
  /// Lower bound on the q-expansion precision of every basis; 0 = automatic.
  std::size_t precision = 0;
  std::optional<std::filesystem::path> cache_dir;
};

/// A derived formula bundled with the basis it refers to.
struct FormulaEntry {
  std::shared_ptr<const ModularBasis> basis;
  ConvolutionFormula formula;
  WClosedForm closed;
};

/// Derives, caches and evaluates convolution-sum formulas. Each level's basis
/// and each (alpha, beta) formula is built at most once, even under
/// concurrent callers.
class FormulaProvider final : public WSource {
 public:
  explicit FormulaProvider(ProviderOptions options = {});

  Natural W(std::int64_t alpha, std::int64_t beta, std::int64_t n) override;

  /// Requires coprime 1 <= alpha < beta. Throws UnsupportedLevelError when the
  /// level is outside the supported class and nothing is cached for it.
  std::shared_ptr<const FormulaEntry> formula(std::int64_t alpha, std::int64_t beta);
  std::shared_ptr<const ModularBasis> basis(std::int64_t level);

  /// As formula(), with basis expansions reaching at least q^n.
  std::shared_ptr<const FormulaEntry> formula_covering(std::int64_t alpha, std::int64_t beta, std::int64_t n);

  /// Fallbacks and cache events, in the order they happened.
  std::vector<std::string> events() const;

  const ProviderOptions& options() const { return options_; }

 private:
  template <class V>
  using Slot = std::shared_future<std::shared_ptr<const V>>;

  std::shared_ptr<const ModularBasis> basis_from(std::int64_t level, BasisSource source);
  std::shared_ptr<const ModularBasis> build_basis(std::int64_t level, BasisSource source);
  std::size_t base_precision(std::int64_t level) const;
  std::shared_ptr<const FormulaEntry> build_formula(std::int64_t alpha, std::int64_t beta);
  void note(std::string event);

  ProviderOptions options_;
  std::optional<CacheStore> cache_;
  mutable std::mutex mu_;
  std::map<std::pair<std::int64_t, BasisSource>, Slot<ModularBasis>> bases_;
  std::map<std::int64_t, bool> fixture_failed_;
  std::map<std::pair<std::int64_t, std::int64_t>, Slot<FormulaEntry>> formulas_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::size_t>, Slot<FormulaEntry>> deep_;
  std::vector<std::string> events_;
};

/// gcd reduction, then the diagonal closed form when alpha = beta, else the
/// provider's formula for the reduced pair.
Natural dispatch_W(std::int64_t alpha, std::int64_t beta, std::int64_t n, FormulaProvider& provider);

}  // namespace divconv
