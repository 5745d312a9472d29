#include "divconv/convolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "divconv/errors.hpp"
#include "divconv/linalg.hpp"

namespace divconv {

Natural brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  if (alpha < 1 || beta < 1) throw DomainError("brute_force_W requires alpha, beta >= 1");
  Natural total = 0;
  for (std::int64_t l = 1; alpha * l < n; ++l) {
    const std::int64_t rest = n - alpha * l;
    if (rest % beta != 0) continue;
    total += sigma(1, l) * sigma(1, rest / beta);
  }
  return total;
}

std::optional<ReducedArgs> reduce_by_gcd(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  if (alpha < 1 || beta < 1) throw DomainError("reduce_by_gcd requires alpha, beta >= 1");
  const std::int64_t g = std::gcd(alpha, beta);
  if (n % g != 0) return std::nullopt;
  return ReducedArgs{alpha / g, beta / g, n / g};
}

BigRational diagonal_W(std::int64_t alpha, std::int64_t n) {
  if (alpha < 1) throw DomainError("diagonal_W requires alpha >= 1");
  if (n < 1 || n % alpha != 0) return 0;
  const std::int64_t m = n / alpha;
  BigRational v = BigRational(5, 12) * BigRational(sigma(3, m)) +
                  (BigRational(1, 12) - BigRational(n, 2 * alpha)) * BigRational(sigma(1, m));
  v.canonicalize();
  return v;
}

std::int64_t default_verify_depth(std::int64_t level) { return std::max<std::int64_t>(2 * sturm_bound(level), 200); }

namespace {

// Row of the linear system for coefficient index n (n = 0 is the constant row).
std::vector<BigRational> system_row(const ModularBasis& basis, const std::vector<std::int64_t>& divs, std::int64_t n) {
  std::vector<BigRational> row;
  row.reserve(divs.size() + basis.cusp().size());
  for (auto d : divs) {
    if (n == 0) {
      row.emplace_back(1);
    } else {
      row.emplace_back(240 * sigma_scaled(3, n, d));
    }
  }
  for (std::size_t j = 0; j < basis.cusp().size(); ++j) row.push_back(basis.coefficient(j, n));
  return row;
}

}  // namespace

ConvolutionFormula derive_formula(std::int64_t alpha, std::int64_t beta, const ModularBasis& input_basis,
                                  std::int64_t verify_depth) {
  if (alpha < 1 || beta < 1 || std::gcd(alpha, beta) != 1) {
    throw DomainError("derive_formula requires coprime alpha, beta >= 1");
  }
  if (alpha * beta != input_basis.level()) {
    throw DomainError("basis level " + std::to_string(input_basis.level()) + " does not match alpha*beta = " +
                      std::to_string(alpha * beta));
  }
  const std::int64_t N = alpha * beta;
  const std::int64_t depth = std::max(verify_depth > 0 ? verify_depth : default_verify_depth(N), sturm_bound(N));
  const ModularBasis& basis = input_basis;
  std::optional<ModularBasis> deeper;
  const ModularBasis* b = &basis;
  if (static_cast<std::int64_t>(basis.precision()) < depth) {
    deeper.emplace(basis.with_precision(static_cast<std::size_t>(depth)));
    b = &*deeper;
  }
  const auto T = static_cast<std::int64_t>(b->precision());
  const QSeries lhs = squared_difference(alpha, beta, static_cast<std::size_t>(T));
  const auto divs = divisors(N);
  const std::size_t cols = divs.size() + b->cusp().size();
  const auto m_s = static_cast<std::int64_t>(b->cusp().size());

  std::set<std::int64_t> chosen(divs.begin(), divs.end());
  for (std::int64_t n = 1; n <= m_s; ++n) chosen.insert(n);
  std::vector<std::int64_t> samples(chosen.begin(), chosen.end());

  linalg::RationalMatrix a;
  std::vector<BigRational> rhs;
  a.push_back(system_row(*b, divs, 0));
  rhs.push_back(lhs[0]);
  for (auto n : samples) {
    if (n > T) throw UnderdeterminedError("sample index " + std::to_string(n) + " exceeds precision");
    a.push_back(system_row(*b, divs, n));
    rhs.push_back(lhs[static_cast<std::size_t>(n)]);
  }
  std::int64_t next = m_s + 1;
  while (linalg::rank(a) < cols) {
    while (chosen.count(next) != 0) ++next;
    if (next > T) {
      throw UnderdeterminedError("system for (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                 ") stays rank-deficient up to n = " + std::to_string(T));
    }
    chosen.insert(next);
    samples.push_back(next);
    a.push_back(system_row(*b, divs, next));
    rhs.push_back(lhs[static_cast<std::size_t>(next)]);
  }

  const linalg::SolveResult sol = linalg::solve(a, rhs);
  if (sol.status == linalg::SolveStatus::Inconsistent) {
    throw BasisNotSpanningError("sampled system for (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                ") is inconsistent: basis " + b->id() + " does not span the squared difference");
  }
  if (sol.status == linalg::SolveStatus::Underdetermined) {
    throw UnderdeterminedError("solution not unique for (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
  }

  ConvolutionFormula f;
  f.alpha = alpha;
  f.beta = beta;
  f.level = N;
  for (std::size_t i = 0; i < divs.size(); ++i) f.X[divs[i]] = sol.x[i];
  f.Y.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(divs.size()), sol.x.end());
  f.basis_ref = b->id();
  f.sample_indices = samples;

  for (std::int64_t n = 0; n <= depth; ++n) {
    if (identity_coefficient(f, *b, n) != lhs[static_cast<std::size_t>(n)]) {
      throw BasisNotSpanningError("identity for (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                  ") fails at q^" + std::to_string(n));
    }
  }
  f.verified_to = depth;
  return f;
}

BigRational identity_coefficient(const ConvolutionFormula& f, const ModularBasis& basis, std::int64_t n) {
  BigRational v = 0;
  if (n == 0) {
    for (const auto& [d, x] : f.X) v += x;
    return v;
  }
  for (const auto& [d, x] : f.X) {
    if (n % d == 0) v += 240 * BigRational(sigma(3, n / d)) * x;
  }
  for (std::size_t j = 0; j < f.Y.size(); ++j) v += f.Y[j] * basis.coefficient(j, n);
  return v;
}

WClosedForm closed_form(const ConvolutionFormula& f) {
  WClosedForm w;
  w.alpha = f.alpha;
  w.beta = f.beta;
  const BigRational ab(f.alpha * f.beta);
  for (const auto& [d, x] : f.X) {
    BigRational c = -x;
    if (d == f.alpha) c += BigRational(f.alpha * f.alpha);
    if (d == f.beta) c += BigRational(f.beta * f.beta);
    c = BigRational(5) * c / (BigRational(24) * ab);
    c.canonicalize();
    w.sigma3[d] = c;
  }
  w.tail.push_back({BigRational(1, 24), BigRational(-1, 4 * f.beta), f.alpha});
  w.tail.push_back({BigRational(1, 24), BigRational(-1, 4 * f.alpha), f.beta});
  for (const auto& y : f.Y) {
    BigRational c = -y / (BigRational(1152) * ab);
    c.canonicalize();
    w.cusp.push_back(c);
  }
  return w;
}

BigRational evaluate_closed_form(const WClosedForm& w, const ModularBasis& basis, std::int64_t n) {
  if (n < 1) throw DomainError("W is evaluated at n >= 1");
  if (n > static_cast<std::int64_t>(basis.precision())) {
    throw DomainError("n = " + std::to_string(n) + " exceeds basis precision " + std::to_string(basis.precision()));
  }
  BigRational v = 0;
  for (const auto& [d, c] : w.sigma3) {
    if (n % d == 0) v += c * BigRational(sigma(3, n / d));
  }
  for (const auto& t : w.tail) {
    if (n % t.divisor == 0) v += (t.constant + t.per_n * n) * BigRational(sigma(1, n / t.divisor));
  }
  for (std::size_t j = 0; j < w.cusp.size(); ++j) v += w.cusp[j] * basis.coefficient(j, n);
  v.canonicalize();
  return v;
}

Natural evaluate_W(const ConvolutionFormula& f, const ModularBasis& basis, std::int64_t n) {
  const BigRational v = evaluate_closed_form(closed_form(f), basis, n);
  if (!is_integer(v) || v < 0) {
    throw FormulaCorruptError("W_(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")(" +
                              std::to_string(n) + ") evaluated to " + to_string(v));
  }
  return v.get_num();
}

}  // namespace divconv
