#pragma once

#include <cstdint>
#include <string>

namespace divconv {

/// Quad: a(x1^2+..+x4^2) + b(x5^2+..+x8^2).
/// Hex:  c(x1^2+x1x2+x2^2+x3^2+x3x4+x4^2) + d(same in x5..x8).
enum class Form { Quad, Hex };

inline std::string to_string(Form f) { return f == Form::Quad ? "quad" : "hex"; }

/// multiplier * sigma_k(n / divisor); zero when divisor does not divide n.
struct SigmaCall {
  std::int64_t multiplier = 0;
  std::int64_t divisor = 1;
  friend bool operator==(const SigmaCall&, const SigmaCall&) = default;
};

/// multiplier * W_(alpha,beta)(n / divisor); zero when divisor does not divide n.
struct WCall {
  std::int64_t multiplier = 0;
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::int64_t divisor = 1;
  friend bool operator==(const WCall&, const WCall&) = default;
};

}  // namespace divconv
