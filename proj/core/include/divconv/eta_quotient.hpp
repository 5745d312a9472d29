#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace divconv {

/// prod over delta | N of eta(delta z)^{r_delta}. Zero exponents are not
/// stored; every stored key divides the level.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  EtaQuotient(std::int64_t level, std::map<std::int64_t, int> exponents);

  /// Exponents listed over the ascending divisors of `level`.
  static EtaQuotient from_vector(std::int64_t level, std::span<const int> exponents);

  std::int64_t level() const { return level_; }
  const std::map<std::int64_t, int>& exponents() const { return exponents_; }
  int exponent(std::int64_t delta) const;

  /// Exponents over the ascending divisors of the level, zeros included.
  std::vector<int> exponent_vector() const;

  /// sum r_delta, i.e. twice the weight.
  int weight_times_two() const;

  /// Exponent-wise sum; the level of the result is lcm of the two levels.
  EtaQuotient combined(const EtaQuotient& other) const;

  /// Same exponents viewed at a multiple of the level.
  EtaQuotient at_level(std::int64_t new_level) const;

  /// Human-readable product, e.g. "eta(z)^4 eta(5z)^4".
  std::string label() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::int64_t level_ = 1;
  std::map<std::int64_t, int> exponents_;
};

}  // namespace divconv
