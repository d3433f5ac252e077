#include "nilzeta/linalg.hpp"

#include <algorithm>
#include <utility>

#include "nilzeta/error.hpp"

namespace nilzeta {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  require(a.front().size() == b.size(), Errc::input, "matrix shapes do not match");
  std::size_t cols = b.empty() ? 0 : b.front().size();
  RatMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const RatMatrix& m) {
  require(v.size() == m.size(), Errc::input, "vector/matrix shapes do not match");
  std::size_t cols = m.empty() ? 0 : m.front().size();
  std::vector<Rational> out(cols);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[k][j] != 0) out[j] += v[k] * m[k][j];
  }
  return out;
}

namespace {

// Gaussian elimination in place; returns pivot columns and the sign/scale
// bookkeeping needed for the determinant.
std::vector<std::size_t> eliminate(RatMatrix& m, Rational* det) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m.front().size(), r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(RatMatrix m) {
  require(m.empty() || m.size() == m.front().size(), Errc::input, "determinant of non-square matrix");
  Rational det;
  auto piv = eliminate(m, &det);
  return piv.size() == m.size() ? det : Rational(0);
}

std::size_t rank(RatMatrix m) { return eliminate(m, nullptr).size(); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    require(m[i].size() == n, Errc::input, "inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  RatMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::optional<std::vector<Rational>> solve_left(const RatMatrix& a, const std::vector<Rational>& b) {
  // x * A = b  <=>  A^T x^T = b^T.
  std::size_t unknowns = a.size();
  std::size_t eqs = b.size();
  RatMatrix m(eqs, std::vector<Rational>(unknowns + 1));
  for (std::size_t i = 0; i < unknowns; ++i) {
    require(a[i].size() == eqs, Errc::input, "system shapes do not match");
    for (std::size_t j = 0; j < eqs; ++j) m[j][i] = a[i][j];
  }
  for (std::size_t j = 0; j < eqs; ++j) m[j][unknowns] = b[j];
  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t p = r;
    while (p < eqs && m[p][c] == 0) ++p;
    if (p == eqs) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= unknowns; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i)
    if (m[i][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][unknowns];
  return x;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) out[i].emplace_back(x);
  }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  require(is_integral(m), Errc::invariant, "matrix is not integral");
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].emplace_back(x.get_num());
  return out;
}

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  for (const auto& r : rows) require(r.size() == columns, Errc::input, "row has wrong length");
  IntMatrix h;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < columns; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < columns; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<Integer> hnf_reduce(const IntMatrix& hnf, std::vector<Integer> v) {
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (v[c] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), row[c].get_mpz_t());
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

}  // namespace nilzeta
