#include "divconv/linalg.hpp"

#include <utility>

#include "divconv/errors.hpp"

namespace divconv::linalg {

namespace {

std::size_t column_count(const IntegerMatrix& m) {
  std::size_t cols = 0;
  for (const auto& row : m) {
    if (row.empty()) continue;
    if (cols != 0 && row.size() != cols) throw DomainError("ragged matrix");
    cols = row.size();
  }
  return cols;
}

}  // namespace

std::size_t rank(IntegerMatrix m) {
  const std::size_t cols = column_count(m);
  std::erase_if(m, [](const auto& row) { return row.empty(); });
  const std::size_t rows = m.size();
  std::size_t r = 0;
  Integer prev_pivot = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev_pivot = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix scaled;
  scaled.reserve(m.size());
  for (const auto& row : m) {
    Integer lcm = 1;
    for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.get_num() * (lcm / v.get_den()));
    scaled.push_back(std::move(out));
  }
  return rank(std::move(scaled));
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SolveResult solve(RationalMatrix a, std::vector<BigRational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("solve: right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw DomainError("solve: ragged matrix");
    a[i].push_back(std::move(b[i]));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const BigRational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigRational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  SolveResult result;
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) {
      result.status = SolveStatus::Inconsistent;
      return result;
    }
  }
  if (r < cols) {
    result.status = SolveStatus::Underdetermined;
    return result;
  }
  result.status = SolveStatus::Unique;
  result.x.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) result.x[pivot_cols[i]] = a[i][cols];
  return result;
}

}  // namespace divconv::linalg
