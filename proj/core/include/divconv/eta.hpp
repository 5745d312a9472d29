#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/eta_quotient.hpp"

namespace divconv {

struct LigozatReport {
  bool cond_i = false;    // sum delta r_delta = 0 mod 24
  bool cond_ii = false;   // prod delta^{r_delta} is a square in Q
  bool cond_iii = false;  // 0 < sum r_delta = 0 mod 4
  /// sum (N / delta) r_delta = 0 mod 24. Without it the quotient can carry a
  /// nontrivial character on Gamma_0(N) (eta(3z)^8 is of level 9, not 33).
  bool cond_level = false;
  /// d | N -> sum_delta gcd(d, delta)^2 r_delta / delta, un-normalized.
  std::map<std::int64_t, BigRational> orders;
  /// All of cond_i, cond_ii, cond_iii, cond_level and every order >= 0.
  bool is_modular = false;
  /// is_modular with every order > 0.
  bool is_cusp = false;
  /// sum r_delta; the weight is half of it.
  int weight_times_two = 0;
  /// (sum delta r_delta) / 24, present when cond_i holds.
  std::optional<std::int64_t> order_at_infinity;

  int weight() const { return weight_times_two / 2; }
};

LigozatReport ligozat_check(const EtaQuotient& e);

/// Throws NonIntegralExponentError when condition (i) fails.
std::int64_t order_at_infinity(const EtaQuotient& e);

/// prod delta^{r_delta} is a rational square, tested on the exact product.
bool product_is_square(const EtaQuotient& e);
/// Same test via parity of sum r_delta v_p(delta) for each prime p.
bool product_is_square_by_valuation(const EtaQuotient& e);

struct SearchOptions {
  int bound = 10;
  /// Largest order at infinity kept; 0 means dim S_k.
  std::int64_t max_order = 0;
  int jobs = 1;
};

/// All cusp-form eta quotients of level N with sum r_delta = weight_times_two,
/// |r_delta| <= bound and order at infinity <= max_order, in lexicographic
/// order of the exponent vector over ascending divisors.
std::vector<EtaQuotient> search_cusp_forms(std::int64_t level, int weight_times_two, const SearchOptions& options);

}  // namespace divconv
