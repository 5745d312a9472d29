#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "divconv/arith.hpp"
#include "divconv/eta_quotient.hpp"

namespace divconv {

/// Truncated power series c_0 + c_1 q + ... + c_T q^T over Q. T is the
/// precision; nothing above it is ever read or written.
class QSeries {
 public:
  /// The zero series at precision 0.
  QSeries() : coeffs_(1) {}
  /// The zero series at precision T.
  explicit QSeries(std::size_t precision) : coeffs_(precision + 1) {}
  /// Takes ownership of c_0..c_T. Throws DomainError when empty.
  explicit QSeries(std::vector<BigRational> coeffs);

  static QSeries constant(const BigRational& c, std::size_t precision);

  std::size_t precision() const { return coeffs_.size() - 1; }

  /// Throws std::out_of_range above the precision.
  const BigRational& operator[](std::size_t n) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, if any.
  std::optional<std::size_t> valuation() const;
  /// Coefficients are all integers.
  bool is_integral() const;

  QSeries truncated(std::size_t precision) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries scale(const BigRational& c, const QSeries& a);
/// Cauchy product at precision min(T_a, T_b).
QSeries mul(const QSeries& a, const QSeries& b);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const BigRational& c, const QSeries& a) { return scale(c, a); }

/// q -> q^t. Throws DomainError for t < 1.
QSeries substitute_power(const QSeries& a, std::int64_t t);

/// L(q^t) = 1 - 24 sum sigma(n) q^{tn}.
QSeries eisenstein_L(std::int64_t t, std::size_t precision);
/// M(q^t) = 1 + 240 sum sigma_3(n) q^{tn}.
QSeries eisenstein_M(std::int64_t t, std::size_t precision);

/// (alpha L(q^alpha) - beta L(q^beta))^2.
QSeries squared_difference(std::int64_t alpha, std::int64_t beta, std::size_t precision);

/// prod_{n>=1} (1 - q^{mn})^e for any integer e.
QSeries euler_product_power(std::int64_t m, int e, std::size_t precision);

/// q^s prod_delta F(q^delta)^{r_delta} with s = (sum delta r_delta) / 24.
/// Throws NonIntegralExponentError when 24 does not divide the sum.
QSeries eta_quotient_series(const EtaQuotient& e, std::size_t precision);

}  // namespace divconv
