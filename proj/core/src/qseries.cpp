#include "divconv/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "divconv/errors.hpp"

namespace divconv {

namespace {

// Dense integer coefficients, used where every intermediate is integral.
using IntCoeffs = std::vector<Integer>;

QSeries from_integers(const IntCoeffs& c) {
  std::vector<BigRational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = BigRational(c[i]);
  return QSeries(std::move(out));
}

// prod_{n>=1} (1 - q^n) to precision T, from Euler's pentagonal theorem.
IntCoeffs pentagonal(std::size_t T) {
  IntCoeffs a(T + 1);
  a[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const int sign = (k % 2 == 1) ? -1 : 1;
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 > T) break;
    a[g1] += sign;
    if (g2 <= T) a[g2] += sign;
  }
  return a;
}

// f^e for integer f with f_0 = 1 and e >= 0. Uses
//   n p_n = sum_{k=1..n} ((e+1)k - n) f_k p_{n-k},
// which follows from f p' = e f' p; the division by n is exact.
IntCoeffs power_unit(const IntCoeffs& f, int e) {
  const std::size_t T = f.size() - 1;
  IntCoeffs p(T + 1);
  p[0] = 1;
  Integer acc, term;
  for (std::size_t n = 1; n <= T; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] == 0) continue;
      const long w = static_cast<long>(e + 1) * static_cast<long>(k) - static_cast<long>(n);
      if (w == 0) continue;
      term = f[k] * p[n - k];
      term *= w;
      acc += term;
    }
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return p;
}

// 1/f for integer f with f_0 = 1: c_n = -sum_{k=1..n} f_k c_{n-k}.
IntCoeffs invert_unit(const IntCoeffs& f) {
  const std::size_t T = f.size() - 1;
  IntCoeffs c(T + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= T; ++n) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += f[k] * c[n - k];
    }
    c[n] = -acc;
  }
  return c;
}

}  // namespace

QSeries::QSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a series needs at least the constant coefficient");
}

QSeries QSeries::constant(const BigRational& c, std::size_t precision) {
  QSeries s(precision);
  s.coeffs_[0] = c;
  return s;
}

const BigRational& QSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("coefficient " + std::to_string(n) + " above precision " +
                            std::to_string(precision()));
  }
  return coeffs_[n];
}

bool QSeries::is_zero() const { return !valuation().has_value(); }

std::optional<std::size_t> QSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

QSeries QSeries::truncated(std::size_t precision) const {
  const std::size_t t = std::min(precision, this->precision());
  return QSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(t + 1)));
}

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t T = std::min(a.precision(), b.precision());
  std::vector<BigRational> out(T + 1);
  for (std::size_t i = 0; i <= T; ++i) out[i] = a[i] + b[i];
  return QSeries(std::move(out));
}

QSeries negate(const QSeries& a) {
  std::vector<BigRational> out(a.precision() + 1);
  for (std::size_t i = 0; i <= a.precision(); ++i) out[i] = -a[i];
  return QSeries(std::move(out));
}

QSeries scale(const BigRational& c, const QSeries& a) {
  std::vector<BigRational> out(a.precision() + 1);
  if (c != 0) {
    for (std::size_t i = 0; i <= a.precision(); ++i) out[i] = c * a[i];
  }
  return QSeries(std::move(out));
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t T = std::min(a.precision(), b.precision());
  if (a.is_integral() && b.is_integral()) {
    // Integer fast path: no gcd normalization inside the inner loop.
    IntCoeffs x(T + 1), y(T + 1), z(T + 1);
    for (std::size_t i = 0; i <= T; ++i) {
      x[i] = a[i].get_num();
      y[i] = b[i].get_num();
    }
    for (std::size_t i = 0; i <= T; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j <= T; ++j) {
        if (y[j] != 0) mpz_addmul(z[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
    }
    return from_integers(z);
  }
  std::vector<BigRational> out(T + 1);
  for (std::size_t i = 0; i <= T; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= T; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return QSeries(std::move(out));
}

QSeries substitute_power(const QSeries& a, std::int64_t t) {
  if (t < 1) throw DomainError("substitute_power requires t >= 1");
  const std::size_t T = a.precision();
  const auto step = static_cast<std::size_t>(t);
  std::vector<BigRational> out(T + 1);
  for (std::size_t n = 0; n * step <= T; ++n) out[n * step] = a[n];
  return QSeries(std::move(out));
}

namespace {

QSeries eisenstein(unsigned k, long factor, std::int64_t t, std::size_t T) {
  if (t < 1) throw DomainError("Eisenstein substitution degree must be >= 1");
  const auto step = static_cast<std::size_t>(t);
  std::vector<BigRational> out(T + 1);
  out[0] = 1;
  for (std::size_t n = 1; n * step <= T; ++n) {
    out[n * step] = BigRational(factor * sigma(k, static_cast<std::int64_t>(n)));
  }
  return QSeries(std::move(out));
}

}  // namespace

QSeries eisenstein_L(std::int64_t t, std::size_t precision) { return eisenstein(1, -24, t, precision); }

QSeries eisenstein_M(std::int64_t t, std::size_t precision) { return eisenstein(3, 240, t, precision); }

QSeries squared_difference(std::int64_t alpha, std::int64_t beta, std::size_t precision) {
  if (alpha < 1 || beta < 1) throw DomainError("squared_difference requires alpha, beta >= 1");
  QSeries d = scale(BigRational(alpha), eisenstein_L(alpha, precision)) -
              scale(BigRational(beta), eisenstein_L(beta, precision));
  return mul(d, d);
}

QSeries euler_product_power(std::int64_t m, int e, std::size_t precision) {
  if (m < 1) throw DomainError("euler_product_power requires m >= 1");
  const std::size_t inner = precision / static_cast<std::size_t>(m);
  IntCoeffs p(inner + 1);
  p[0] = 1;
  if (e != 0) {
    p = power_unit(pentagonal(inner), e < 0 ? -e : e);
    if (e < 0) p = invert_unit(p);
  }
  std::vector<BigRational> out(precision + 1);
  for (std::size_t n = 0; n <= inner; ++n) out[n * static_cast<std::size_t>(m)] = BigRational(p[n]);
  return QSeries(std::move(out));
}

QSeries eta_quotient_series(const EtaQuotient& e, std::size_t precision) {
  std::int64_t weighted = 0;
  for (const auto& [delta, r] : e.exponents()) weighted += delta * r;
  if (weighted % 24 != 0) {
    throw NonIntegralExponentError("sum of delta * r_delta = " + std::to_string(weighted) +
                                   " is not divisible by 24 for " + e.label());
  }
  if (weighted < 0) throw DomainError("eta quotient has a pole at infinity: " + e.label());
  const auto s = static_cast<std::size_t>(weighted / 24);
  std::vector<BigRational> out(precision + 1);
  if (s > precision) return QSeries(std::move(out));
  const std::size_t T = precision - s;

  // Logarithmic derivative of prod F(q^delta)^{r_delta} is sum_k g_k q^k with
  // g_k = -sum_{delta | k} r_delta delta sigma(k / delta); then n a_n = sum g_k a_{n-k}.
  IntCoeffs g(T + 1);
  for (std::size_t k = 1; k <= T; ++k) {
    for (const auto& [delta, r] : e.exponents()) {
      if (k % static_cast<std::size_t>(delta) == 0) {
        g[k] -= Integer(r * delta) * sigma(1, static_cast<std::int64_t>(k) / delta);
      }
    }
  }
  IntCoeffs a(T + 1);
  a[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n <= T; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g[k] != 0 && a[n - k] != 0) mpz_addmul(acc.get_mpz_t(), g[k].get_mpz_t(), a[n - k].get_mpz_t());
    }
    mpz_divexact_ui(a[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  for (std::size_t n = 0; n <= T; ++n) out[n + s] = BigRational(a[n]);
  return QSeries(std::move(out));
}

}  // namespace divconv
