#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

template <ExactField T>
struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  Matrix<T> rref;
};

// Gauss-Jordan elimination to reduced row echelon form. Any nonzero entry
// is an acceptable pivot since arithmetic is exact.
template <ExactField T>
RankProfile<T> rank_profile(const Matrix<T>& a) {
  RankProfile<T> out;
  Matrix<T> r = a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && is_zero(r(pivot, col))) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(pivot, j));
    const T inv = T(1) / r(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || is_zero(r(i, col))) continue;
      const T factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (!is_zero(r(row, j))) r(i, j) -= factor * r(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.rref = std::move(r);
  return out;
}

template <ExactField T>
std::size_t rank(const Matrix<T>& a) {
  return rank_profile(a).rank;
}

template <ExactField T>
bool is_invertible(const Matrix<T>& a) {
  require_square(a, "is_invertible");
  return rank(a) == a.rows();
}

// Particular solution of AX = B (free variables set to zero), or nullopt
// when the system is inconsistent.
template <ExactField T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve row mismatch: " + a.shape() + " vs " + b.shape());
  const auto profile = rank_profile(hstack(a, b));
  const std::size_t n = a.cols();
  for (std::size_t col : profile.pivot_columns)
    if (col >= n) return std::nullopt;
  Matrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < profile.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(profile.pivot_columns[i], j) = profile.rref(i, n + j);
  return x;
}

template <ExactField T>
Matrix<T> inverse(const Matrix<T>& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  const auto profile = rank_profile(hstack(a, Matrix<T>::identity(n)));
  if (profile.rank < n || profile.pivot_columns[n - 1] >= n) throw SingularMatrix();
  return profile.rref.block(0, n, n, n);
}

// A = F G with F the pivot columns of A and G the nonzero rows of rref(A).
template <ExactField T>
std::pair<Matrix<T>, Matrix<T>> full_rank_factorization(const Matrix<T>& a) {
  const auto profile = rank_profile(a);
  if (profile.rank == 0) throw ZeroMatrix();
  return {a.select_columns(profile.pivot_columns), profile.rref.block(0, 0, profile.rank, a.cols())};
}

// R(A) ⊆ R(B) for column spaces.
template <ExactField T>
bool range_contained(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("range comparison row mismatch: " + a.shape() + " vs " + b.shape());
  return rank(hstack(b, a)) == rank(b);
}

template <ExactField T>
bool range_equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("range comparison row mismatch: " + a.shape() + " vs " + b.shape());
  const std::size_t joint = rank(hstack(a, b));
  return joint == rank(a) && joint == rank(b);
}

} // namespace ginv
