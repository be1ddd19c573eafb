#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ginv/ginv.hpp"

namespace test {

using ginv::BigRational;
using ginv::CMatrix;
using ginv::GaussianRational;

inline GaussianRational gs(const char* re, const char* im) {
  return {BigRational::parse(re), BigRational::parse(im)};
}

inline GaussianRational g(long re, long im = 0) { return {BigRational(re), BigRational(im)}; }

// Integer matrix literal.
inline CMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  CMatrix m(v.size(), v.empty() ? 0 : v[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = g(v[i][j]);
  return m;
}

inline CMatrix jordan_nilpotent(std::size_t n) {
  CMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = g(1);
  return j;
}

// The running non-normal example: an idempotent with a nonzero off-diagonal entry.
inline CMatrix e_worked() { return ints({{1, 1}, {0, 0}}); }

inline CMatrix sample3() {
  return CMatrix{{g(1, 1), g(2), g(0, -1)}, {g(0), g(0), g(1)}, {g(0), g(0), g(0)}};
}

inline CMatrix sample4() {
  return CMatrix{{g(2), g(1), g(0), g(1)}, {g(0), g(0, 1), g(1), g(0)}, {g(0), g(0), g(0), g(1)}, {g(0), g(0), g(0), g(0)}};
}

// Hand-rolled generator for property tests: unstructured matrices with
// small Gaussian rational entries and a tunable share of zeros, so that
// singular and high-index inputs are common.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long bound = 3) { return BigRational(integer(-bound, bound), integer(1, bound)); }

  GaussianRational scalar(long bound = 3) { return {rational(bound), rational(bound)}; }

  CMatrix matrix(std::size_t rows, std::size_t cols, int zero_percent = 40, long bound = 3) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (integer(0, 99) >= zero_percent) m(i, j) = scalar(bound);
    return m;
  }

  // Rank-deficient square matrix: a product of n x r and r x n factors,
  // optionally shifted to upper triangular form to raise the index.
  CMatrix singular(std::size_t n) {
    const auto r = static_cast<std::size_t>(integer(0, static_cast<long>(n)));
    CMatrix m = matrix(n, r, 20) * matrix(r, n, 20);
    if (integer(0, 1) == 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i && j < n; ++j) m(i, j) = GaussianRational(0);
    }
    return m;
  }

  std::size_t dim(std::size_t lo, std::size_t hi) { return static_cast<std::size_t>(integer(long(lo), long(hi))); }

private:
  std::mt19937_64 rng_;
};

// Oracles. They characterize each inverse as the unique solution of a linear
// system and solve it with their own elimination, sharing nothing with the
// library beyond scalar and matrix arithmetic.
namespace oracle {

using Row = std::vector<GaussianRational>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> eliminate(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const GaussianRational inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const GaussianRational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<Row> rows_of(const CMatrix& a) {
  std::vector<Row> out(a.rows(), Row(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

inline std::size_t rank(const CMatrix& a) {
  auto r = rows_of(a);
  return eliminate(r, a.cols()).size();
}

inline std::size_t index(const CMatrix& a) {
  CMatrix p = CMatrix::identity(a.rows());
  std::size_t r = a.rows();
  for (std::size_t k = 0;; ++k) {
    p = p * a;
    const std::size_t next = rank(p);
    if (next == r) return k;
    r = next;
  }
}

inline CMatrix pow(const CMatrix& a, std::size_t e) {
  CMatrix r = CMatrix::identity(a.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

inline CMatrix column_basis(const CMatrix& a) {
  auto r = rows_of(a);
  const auto pivots = eliminate(r, a.cols());
  CMatrix b(a.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = a(i, pivots[j]);
  return b;
}

inline CMatrix invert(const CMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Row> m(n, Row(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = GaussianRational(1);
  }
  eliminate(m, n);
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m[i][n + j];
  return out;
}

// Orthogonal projector onto the column space of a.
inline CMatrix projector(const CMatrix& a) {
  const CMatrix b = column_basis(a);
  if (b.cols() == 0) return CMatrix(a.rows(), a.rows());
  const CMatrix bs = b.adjoint();
  return b * invert(bs * b) * bs;
}

// Finds X = base * Y (base n x p, Y p x q) with f(X) = target, where f is
// linear. Returns nullopt if inconsistent.
inline std::optional<CMatrix> solve_parametrized(const CMatrix& base, std::size_t q,
                                                 const std::function<CMatrix(const CMatrix&)>& f,
                                                 const CMatrix& target) {
  const std::size_t p = base.cols();
  const std::size_t unknowns = p * q;
  const std::size_t eqs = target.rows() * target.cols();
  std::vector<Row> m(eqs, Row(unknowns + 1));
  for (std::size_t u = 0; u < unknowns; ++u) {
    CMatrix y(p, q);
    y(u / q, u % q) = GaussianRational(1);
    const CMatrix col = f(base * y);
    for (std::size_t e = 0; e < eqs; ++e) m[e][u] = col(e / target.cols(), e % target.cols());
  }
  for (std::size_t e = 0; e < eqs; ++e) m[e][unknowns] = target(e / target.cols(), e % target.cols());
  const auto pivots = eliminate(m, unknowns + 1);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  CMatrix y(p, q);
  for (std::size_t i = 0; i < pivots.size(); ++i) y(pivots[i] / q, pivots[i] % q) = m[i][unknowns];
  return base * y;
}

inline CMatrix vstack(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

// D = A^k Y with A D = D A and D A^(k+1) = A^k.
inline CMatrix drazin(const CMatrix& a) {
  const std::size_t n = a.rows();
  const CMatrix ak = pow(a, index(a));
  const CMatrix ak1 = ak * a;
  const auto f = [&](const CMatrix& x) { return vstack(a * x - x * a, x * ak1); };
  return *solve_parametrized(ak, n, f, vstack(CMatrix(n, n), ak));
}

// C = A^k Y with A C the orthogonal projector onto R(A^k).
inline CMatrix core_ep(const CMatrix& a) {
  const CMatrix ak = pow(a, index(a));
  return *solve_parametrized(ak, a.rows(), [&](const CMatrix& x) { return a * x; }, projector(ak));
}

// X = A* Y with A X the orthogonal projector onto R(A).
inline CMatrix moore_penrose(const CMatrix& a) {
  return *solve_parametrized(a.adjoint(), a.rows(), [&](const CMatrix& x) { return a * x; }, projector(a));
}

// X = A^k Y with A X = (A^⊕)^m A^m.
inline CMatrix m_weak_group(const CMatrix& a, std::size_t m) {
  const CMatrix ak = pow(a, index(a));
  const CMatrix target = pow(core_ep(a), m) * pow(a, m);
  return *solve_parametrized(ak, a.rows(), [&](const CMatrix& x) { return a * x; }, target);
}

} // namespace oracle

} // namespace test
