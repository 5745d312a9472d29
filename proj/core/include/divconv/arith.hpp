#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace divconv {

/// Arbitrary-precision integer. Functions returning Natural never return a
/// negative value.
using Natural = mpz_class;
using Integer = mpz_class;

/// Exact rational. Every BigRational produced by this library is canonical
/// (lowest terms, positive denominator), so == is value equality.
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
BigRational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (optional leading sign). Throws DomainError on
/// malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

bool is_integer(const BigRational& value);

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Trial-division factorization, primes ascending. Requires n >= 1.
std::vector<PrimePower> factorize(std::int64_t n);

/// sigma_k(n) = sum of d^k over positive divisors d of n; 0 for n <= 0.
Natural sigma(unsigned k, std::int64_t n);

/// sigma_k(n / d) when d divides n, else 0. Throws DomainError for d <= 0.
Natural sigma_scaled(unsigned k, std::int64_t n, std::int64_t d);

/// Ascending positive divisors. Throws DomainError for n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t num_divisors(std::int64_t n);

/// Throws DomainError for n <= 0.
std::int64_t euler_phi(std::int64_t n);

/// p-adic valuation of n != 0.
int valuation(std::int64_t n, std::int64_t p);

/// Decomposition n = 2^nu * mho with mho odd; in_class when nu <= 3 and mho
/// is squarefree.
struct LevelClass {
  std::int64_t n = 0;
  int nu = 0;
  std::int64_t mho = 0;
  bool in_class = false;
};

LevelClass classify_level(std::int64_t n);

}  // namespace divconv
