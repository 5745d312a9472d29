#pragma once

#include <cstddef>
#include <vector>

#include "divconv/arith.hpp"

namespace divconv::linalg {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Rank by fraction-free (Bareiss) elimination. Rows may be ragged only if
/// empty; all non-empty rows must share one length.
std::size_t rank(IntegerMatrix m);

/// Clears each row's denominators, then defers to the integer rank.
std::size_t rank(const RationalMatrix& m);

/// Bareiss determinant of a square integer matrix.
Integer determinant(IntegerMatrix m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<BigRational> x;  // filled only when status == Unique
};

/// Exact Gauss-Jordan over Q for a (possibly overdetermined) system a.x = b.
SolveResult solve(RationalMatrix a, std::vector<BigRational> b);

}  // namespace divconv::linalg
