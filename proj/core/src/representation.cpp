#include "divconv/representation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "divconv/errors.hpp"

namespace divconv {

Natural r4(std::int64_t n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return 8 * sigma(1, n) - 32 * sigma_scaled(1, n, 4);
}

Natural s4(std::int64_t n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return 12 * sigma(1, n) - 36 * sigma_scaled(1, n, 3);
}

namespace {

std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Values of the binary form x^2 + y^2 (quad) or x^2 + xy + y^2 (hex) counted
// over the box that contains every solution up to `limit`.
std::vector<std::int64_t> binary_counts(Form form, std::int64_t limit) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(limit + 1));
  // x^2 + xy + y^2 >= (3/4) max(x,y)^2, so |x|, |y| <= sqrt(4 limit / 3).
  const std::int64_t r = form == Form::Quad ? isqrt(limit) : isqrt(4 * limit / 3) + 1;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t v = form == Form::Quad ? x * x + y * y : x * x + x * y + y * y;
      if (v <= limit) ++t[static_cast<std::size_t>(v)];
    }
  }
  return t;
}

std::vector<Natural> quaternary_counts(Form form, std::int64_t limit) {
  const auto t = binary_counts(form, limit);
  std::vector<Natural> out(static_cast<std::size_t>(limit + 1));
  for (std::int64_t i = 0; i <= limit; ++i) {
    for (std::int64_t j = 0; i + j <= limit; ++j) {
      out[static_cast<std::size_t>(i + j)] += t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Natural enumerate4(Form form, std::int64_t n) {
  if (n < 0) return 0;
  const std::int64_t r = form == Form::Quad ? isqrt(n) : isqrt(4 * n / 3) + 1;
  std::int64_t count = 0;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) {
      const std::int64_t ab = form == Form::Quad ? a * a + b * b : a * a + a * b + b * b;
      if (ab > n) continue;
      for (std::int64_t c = -r; c <= r; ++c) {
        for (std::int64_t d = -r; d <= r; ++d) {
          const std::int64_t cd = form == Form::Quad ? c * c + d * d : c * c + c * d + d * d;
          if (ab + cd == n) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

Natural r4_enumerated(std::int64_t n) { return enumerate4(Form::Quad, n); }

Natural s4_enumerated(std::int64_t n) { return enumerate4(Form::Hex, n); }

namespace {

PairSet coprime_pairs_from_blocks(std::int64_t level, Form modality, std::int64_t product,
                                  const std::vector<std::int64_t>& blocks) {
  PairSet out;
  out.level = level;
  out.modality = modality;
  const std::size_t k = blocks.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::int64_t a = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) a *= blocks[i];
    }
    const std::int64_t b = product / a;
    out.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

}  // namespace

PairSet omega4(std::int64_t level) {
  const LevelClass lc = classify_level(level);
  if (level < 1 || level % 4 != 0 || !lc.in_class) {
    throw DomainError("omega4 needs a level divisible by 4 in the class, got " + std::to_string(level));
  }
  std::vector<std::int64_t> blocks;
  if (lc.nu == 3) blocks.push_back(2);
  for (const auto& [p, e] : factorize(lc.mho)) blocks.push_back(p);
  return coprime_pairs_from_blocks(level, Form::Quad, level / 4, blocks);
}

PairSet omega3(std::int64_t level) {
  const LevelClass lc = classify_level(level);
  if (level < 1 || level % 3 != 0 || !lc.in_class) {
    throw DomainError("omega3 needs a level divisible by 3 in the class, got " + std::to_string(level));
  }
  std::vector<std::int64_t> blocks;
  if (lc.nu > 0) blocks.push_back(std::int64_t{1} << lc.nu);
  for (const auto& [p, e] : factorize(lc.mho)) {
    if (p != 3) blocks.push_back(p);
  }
  return coprime_pairs_from_blocks(level, Form::Hex, level / 3, blocks);
}

RepFormula rep_formula(Form modality, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) throw DomainError("representation pair must be coprime and positive");
  const std::int64_t k = modality == Form::Quad ? 4 : 3;
  const std::int64_t s1 = modality == Form::Quad ? 8 : 12;
  const std::int64_t s2 = modality == Form::Quad ? -32 : -36;
  const std::int64_t w1 = modality == Form::Quad ? 64 : 144;
  const std::int64_t w2 = modality == Form::Quad ? 1024 : 1296;
  const std::int64_t w3 = modality == Form::Quad ? -256 : -432;
  RepFormula f;
  f.modality = modality;
  f.pair = {a, b};
  f.sigma_terms = {{s1, a}, {s2, k * a}, {s1, b}, {s2, k * b}};
  f.w_terms = {{w1, a, b, 1}, {w2, a, b, k}, {w3, k * a, b, 1}, {w3, a, k * b, 1}};
  return f;
}

Integer evaluate_terms(const std::vector<SigmaCall>& sigma_calls, const std::vector<WCall>& w, std::int64_t n,
                       WSource& source) {
  Integer total = 0;
  for (const auto& s : sigma_calls) {
    if (n % s.divisor == 0) total += s.multiplier * sigma(1, n / s.divisor);
  }
  for (const auto& c : w) {
    if (n % c.divisor == 0) total += c.multiplier * source.W(c.alpha, c.beta, n / c.divisor);
  }
  return total;
}

Integer evaluate_sigma3_terms(const std::vector<SigmaCall>& sigma3, std::int64_t n) {
  Integer total = 0;
  for (const auto& s : sigma3) {
    if (n % s.divisor == 0) total += s.multiplier * sigma(3, n / s.divisor);
  }
  return total;
}

namespace {

Natural count(Form form, std::int64_t a, std::int64_t b, std::int64_t n, WSource& source) {
  if (n < 0) throw DomainError("representation counts need n >= 0");
  if (n == 0) return 1;
  const RepFormula f = rep_formula(form, a, b);
  Integer v = evaluate_terms(f.sigma_terms, f.w_terms, n, source);
  if (v < 0) throw FormulaCorruptError("representation count evaluated to " + v.get_str());
  return v;
}

}  // namespace

Natural count_N(std::int64_t a, std::int64_t b, std::int64_t n, WSource& source) {
  return count(Form::Quad, a, b, n, source);
}

Natural count_R(std::int64_t c, std::int64_t d, std::int64_t n, WSource& source) {
  return count(Form::Hex, c, d, n, source);
}

Natural rep_oracle(Form form, std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t ceiling) {
  if (n > ceiling) {
    throw OracleCeilingError("oracle ceiling is " + std::to_string(ceiling) + ", asked for n = " + std::to_string(n));
  }
  if (n < 0 || a < 1 || b < 1) return 0;
  // Tables are built once per form up to the largest ceiling requested.
  static std::mutex mu;
  static std::vector<Natural> quad, hex;
  std::vector<Natural> table;
  {
    std::lock_guard lock(mu);
    auto& t = form == Form::Quad ? quad : hex;
    if (static_cast<std::int64_t>(t.size()) <= n) t = quaternary_counts(form, std::max(n, ceiling));
    table = t;
  }
  Natural total = 0;
  for (std::int64_t l = 0; a * l <= n; ++l) {
    const std::int64_t rest = n - a * l;
    if (rest % b != 0) continue;
    total += table[static_cast<std::size_t>(l)] * table[static_cast<std::size_t>(rest / b)];
  }
  return total;
}

}  // namespace divconv
