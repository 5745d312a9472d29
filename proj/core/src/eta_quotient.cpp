#include "divconv/eta_quotient.hpp"

#include <numeric>

#include "divconv/arith.hpp"
#include "divconv/errors.hpp"

namespace divconv {

EtaQuotient::EtaQuotient(std::int64_t level, std::map<std::int64_t, int> exponents) : level_(level) {
  if (level < 1) throw DomainError("eta quotient level must be >= 1");
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw DomainError("eta exponent key " + std::to_string(delta) + " does not divide level " +
                        std::to_string(level));
    }
    if (r != 0) exponents_.emplace(delta, r);
  }
}

EtaQuotient EtaQuotient::from_vector(std::int64_t level, std::span<const int> exponents) {
  auto divs = divisors(level);
  if (divs.size() != exponents.size()) {
    throw DomainError("expected " + std::to_string(divs.size()) + " exponents for level " +
                      std::to_string(level));
  }
  std::map<std::int64_t, int> m;
  for (std::size_t i = 0; i < divs.size(); ++i) m[divs[i]] = exponents[i];
  return EtaQuotient(level, std::move(m));
}

int EtaQuotient::exponent(std::int64_t delta) const {
  auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::vector<int> EtaQuotient::exponent_vector() const {
  std::vector<int> out;
  for (auto d : divisors(level_)) out.push_back(exponent(d));
  return out;
}

int EtaQuotient::weight_times_two() const {
  int s = 0;
  for (const auto& [delta, r] : exponents_) s += r;
  return s;
}

EtaQuotient EtaQuotient::combined(const EtaQuotient& other) const {
  std::map<std::int64_t, int> m = exponents_;
  for (const auto& [delta, r] : other.exponents_) m[delta] += r;
  return EtaQuotient(std::lcm(level_, other.level_), std::move(m));
}

EtaQuotient EtaQuotient::at_level(std::int64_t new_level) const {
  if (new_level < 1 || new_level % level_ != 0) {
    throw DomainError("level " + std::to_string(new_level) + " is not a multiple of " + std::to_string(level_));
  }
  return EtaQuotient(new_level, exponents_);
}

std::string EtaQuotient::label() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [delta, r] : exponents_) {
    if (!out.empty()) out += ' ';
    out += delta == 1 ? std::string("eta(z)") : "eta(" + std::to_string(delta) + "z)";
    if (r != 1) out += "^" + std::to_string(r);
  }
  return out;
}

}  // namespace divconv
