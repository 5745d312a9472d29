#include "divconv/arith.hpp"

#include <algorithm>
#include <cctype>

#include "divconv/errors.hpp"

namespace divconv {

BigRational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  return make_rational(Integer(num_s), Integer(std::string(den)));
}

std::string to_string(const BigRational& value) { return value.get_str(); }

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n <= 0) throw DomainError("factorize requires n >= 1");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Natural sigma(unsigned k, std::int64_t n) {
  if (n <= 0) return 0;
  // Multiplicative closed form: prod over p^e of (p^{k(e+1)} - 1) / (p^k - 1).
  Natural result = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (k == 0) {
      result *= e + 1;
      continue;
    }
    Natural pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    Natural top;
    mpz_pow_ui(top.get_mpz_t(), pk.get_mpz_t(), static_cast<unsigned long>(e + 1));
    result *= (top - 1) / (pk - 1);
  }
  return result;
}

Natural sigma_scaled(unsigned k, std::int64_t n, std::int64_t d) {
  if (d <= 0) throw DomainError("sigma_scaled requires d >= 1");
  if (n % d != 0) return 0;
  return sigma(k, n / d);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw DomainError("divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t num_divisors(std::int64_t n) {
  std::int64_t count = 1;
  for (const auto& pp : factorize(n)) count *= pp.exponent + 1;
  return count;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw DomainError("euler_phi requires n >= 1");
  std::int64_t result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

LevelClass classify_level(std::int64_t n) {
  if (n <= 0) throw DomainError("classify_level requires n >= 1");
  LevelClass lc;
  lc.n = n;
  lc.nu = valuation(n, 2);
  lc.mho = n >> lc.nu;
  bool squarefree = true;
  for (const auto& pp : factorize(lc.mho)) squarefree = squarefree && pp.exponent == 1;
  lc.in_class = lc.nu <= 3 && squarefree;
  return lc;
}

}  // namespace divconv
