#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/forms.hpp"
#include "divconv/provider.hpp"

namespace divconv {

/// Four-square count from 8 sigma(n) - 32 sigma(n/4); r4(0) = 1.
Natural r4(std::int64_t n);
/// Count for x1^2+x1x2+x2^2+x3^2+x3x4+x4^2 from 12 sigma(n) - 36 sigma(n/3); s4(0) = 1.
Natural s4(std::int64_t n);

/// The same counts by looping over all integer vectors in the ellipsoid.
Natural r4_enumerated(std::int64_t n);
Natural s4_enumerated(std::int64_t n);

struct PairSet {
  std::int64_t level = 0;
  Form modality = Form::Quad;
  /// Coprime (a, b), a <= b, ascending by a.
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

/// Pairs (a, b) with a b = level / 4 built from the prime-power blocks
/// {2^(nu-2)} and the odd primes. Requires 4 | level and level in the class.
PairSet omega4(std::int64_t level);
/// Pairs with c d = level / 3 built from {2^nu} and the odd primes other than
/// 3. Requires 3 | level and level in the class.
PairSet omega3(std::int64_t level);

/// The generic representation formula for a coprime pair:
///   quad: 8 s(n/a) - 32 s(n/4a) + 8 s(n/b) - 32 s(n/4b)
///         + 64 W_(a,b)(n) + 1024 W_(a,b)(n/4) - 256 (W_(4a,b)(n) + W_(a,4b)(n))
///   hex:  12 s(n/c) - 36 s(n/3c) + 12 s(n/d) - 36 s(n/3d)
///         + 144 W_(c,d)(n) + 1296 W_(c,d)(n/3) - 432 (W_(3c,d)(n) + W_(c,3d)(n))
struct RepFormula {
  Form modality = Form::Quad;
  std::pair<std::int64_t, std::int64_t> pair;
  std::vector<SigmaCall> sigma_terms;
  std::vector<WCall> w_terms;
};

RepFormula rep_formula(Form modality, std::int64_t a, std::int64_t b);

/// Sum of the sigma (k = 1) and W calls at n. May be negative for formulas
/// that do not describe a count.
Integer evaluate_terms(const std::vector<SigmaCall>& sigma, const std::vector<WCall>& w, std::int64_t n, WSource& source);
Integer evaluate_sigma3_terms(const std::vector<SigmaCall>& sigma3, std::int64_t n);

Natural count_N(std::int64_t a, std::int64_t b, std::int64_t n, WSource& source);
Natural count_R(std::int64_t c, std::int64_t d, std::int64_t n, WSource& source);

inline constexpr std::int64_t kDefaultOracleCeiling = 200;

/// sum over a l + b m = n, l, m >= 0 of t(l) t(m), with t the four-variable
/// count built by lattice counting (not by divisor sums). Throws
/// OracleCeilingError when n > ceiling.
Natural rep_oracle(Form form, std::int64_t a, std::int64_t b, std::int64_t n,
                   std::int64_t ceiling = kDefaultOracleCeiling);

}  // namespace divconv
