#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/spaces.hpp"

namespace divconv {

/// sum sigma(l) sigma(m) over positive l, m with alpha l + beta m = n.
Natural brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n);

struct ReducedArgs {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t n = 0;
};

/// Divides out g = gcd(alpha, beta); nullopt when g does not divide n (W = 0).
std::optional<ReducedArgs> reduce_by_gcd(std::int64_t alpha, std::int64_t beta, std::int64_t n);

/// W_(alpha,alpha)(n) = (5/12) sigma_3(n/alpha) + (1/12 - n/(2 alpha)) sigma(n/alpha).
BigRational diagonal_W(std::int64_t alpha, std::int64_t n);

/// Solution of
///   (alpha L(q^alpha) - beta L(q^beta))^2
///     = sum_delta X_delta M(q^delta) + sum_j Y_j B_j(q)
/// on a given basis, with the depth to which it was checked.
struct ConvolutionFormula {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t level = 0;
  std::map<std::int64_t, BigRational> X;
  std::vector<BigRational> Y;
  std::string basis_ref;
  std::int64_t verified_to = 0;
  /// Coefficient indices used as equations, in order.
  std::vector<std::int64_t> sample_indices;

  friend bool operator==(const ConvolutionFormula&, const ConvolutionFormula&) = default;
};

/// W in closed form:
///   sum_delta s_delta sigma_3(n/delta) + sum (c0 + c1 n) sigma(n/e) + sum_j c_j b_j(n).
struct WClosedForm {
  struct Tail {
    BigRational constant;
    BigRational per_n;
    std::int64_t divisor = 1;
    friend bool operator==(const Tail&, const Tail&) = default;
  };
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::map<std::int64_t, BigRational> sigma3;
  std::vector<Tail> tail;
  std::vector<BigRational> cusp;
};

/// Default verification depth: max(2 * Sturm bound, 200).
std::int64_t default_verify_depth(std::int64_t level);

/// Solves for X and Y and checks the identity for n <= verify_depth
/// (0 selects the default). Throws UnderdeterminedError when the sampled
/// system never reaches full column rank, BasisNotSpanningError when it is
/// inconsistent or fails verification.
ConvolutionFormula derive_formula(std::int64_t alpha, std::int64_t beta, const ModularBasis& basis,
                                  std::int64_t verify_depth = 0);

/// Coefficients of W derived from X and Y; the tail is basis independent.
WClosedForm closed_form(const ConvolutionFormula& f);

/// Exact value of the closed form; b_j(n) read from the basis.
BigRational evaluate_closed_form(const WClosedForm& w, const ModularBasis& basis, std::int64_t n);

/// Closed-form value, which must be a non-negative integer (FormulaCorruptError
/// otherwise). Throws DomainError when n exceeds the basis precision.
Natural evaluate_W(const ConvolutionFormula& f, const ModularBasis& basis, std::int64_t n);

/// Coefficient of q^n on the right-hand side of the solved identity.
BigRational identity_coefficient(const ConvolutionFormula& f, const ModularBasis& basis, std::int64_t n);

}  // namespace divconv
