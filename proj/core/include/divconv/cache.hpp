#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divconv/convolution.hpp"
#include "divconv/spaces.hpp"

namespace divconv {

inline constexpr int kCacheFormatVersion = 1;

/// Versioned JSON text for bases and formulas. Rationals are "p/q" strings.
std::string serialize_basis(const ModularBasis& basis);
/// Rebuilds the generator series at `precision` and checks the stored
/// checksum; throws CacheError on malformed text or a checksum mismatch.
ModularBasis deserialize_basis(std::string_view text, std::size_t precision);

std::string serialize_formula(const ConvolutionFormula& f);
ConvolutionFormula deserialize_formula(std::string_view text);

/// One directory of `{kind}-{level}.json` files. A basis file holds one
/// basis; a formula file holds every formula derived at that level.
/// Writes go to a temporary file that is then renamed into place.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir);

  /// The --cache-dir value when given, else $DIVCONV_CACHE, else nothing.
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view kind, std::int64_t level) const;

  std::optional<ModularBasis> load_basis(std::int64_t level, std::size_t precision) const;
  void store_basis(const ModularBasis& basis);

  std::optional<ConvolutionFormula> load_formula(std::int64_t alpha, std::int64_t beta, std::string_view basis_ref) const;
  std::vector<ConvolutionFormula> load_formulas(std::int64_t level) const;
  void store_formula(const ConvolutionFormula& f);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

}  // namespace divconv
