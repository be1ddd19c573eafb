#pragma once

#include <cstddef>
#include <utility>

#include "ginv/inverses.hpp"
#include "ginv/m_weak_group.hpp"

namespace ginv {

// A = x + y with x group invertible, y nilpotent, x* A^(m-1) y = y x = 0.
template <ExactField T>
struct MwgDecomposition {
  std::size_t m = 1;
  Matrix<T> x;
  Matrix<T> y;
};

// x = A^2 z, y = A - A^2 z with z the m-weak group inverse; z is then x^#.
template <ExactField T>
MwgDecomposition<T> mwg_decompose(const Matrix<T>& a, std::size_t m) {
  const Matrix<T> z = m_weak_group(a, m);
  MwgDecomposition<T> d{m, a * a * z, {}};
  d.y = a - d.x;
  return d;
}

// Core-nilpotent split a1 = A^2 A^D, a2 = A - a1.
template <ExactField T>
std::pair<Matrix<T>, Matrix<T>> core_nilpotent(const Matrix<T>& a) {
  Matrix<T> a1 = a * a * drazin(a);
  Matrix<T> a2 = a - a1;
  return {std::move(a1), std::move(a2)};
}

// Drazin inverse of a1 + a2 when a2 a1 = 0, a1 is group invertible and
// a2^k = 0:  a1^# + sum_{j=1}^{k-1} (a1^#)^(j+1) a2^j.
template <ExactField T>
Matrix<T> drazin_from_parts(const Matrix<T>& a1, const Matrix<T>& a2, std::size_t k) {
  require_square(a1, "drazin_from_parts");
  if (a1.rows() != a2.rows() || !a2.is_square())
    throw DimensionError("drazin_from_parts: " + a1.shape() + " vs " + a2.shape());
  if (k == 0) throw ArgumentError("drazin_from_parts requires k >= 1");
  if (!(a2 * a1).is_zero()) throw HypothesisViolated("a2 a1 = 0");
  const auto data = drazin_data(a1);
  if (data.index > 1) throw HypothesisViolated("a1 group invertible");
  if (!power(a2, k).is_zero()) throw HypothesisViolated("a2^k = 0");
  const Matrix<T>& g = data.drazin;
  Matrix<T> result = g;
  Matrix<T> g_pow = g * g;
  Matrix<T> a2_pow = a2;
  for (std::size_t j = 1; j < k; ++j) {
    result += g_pow * a2_pow;
    g_pow = g_pow * g;
    a2_pow = a2_pow * a2;
  }
  return result;
}

// p = I - A A^(W_m): idempotent with A + p invertible, (A^D)* A^m p = 0 and
// R(A^D) = R(I - p).
template <ExactField T>
Matrix<T> polar_idempotent(const Matrix<T>& a, std::size_t m) {
  return Matrix<T>::identity(a.rows()) - a * m_weak_group(a, m);
}

// Given z solving  A z^2 = z,  (A^m)* A^(m+1) z Hermitian,  A^n = A z A^n,
// returns A A^D z, which is the m-weak group inverse. The last condition is
// tested at n = ind(A) + 1, which is implied by any smaller n and implies
// every larger one.
template <ExactField T>
Matrix<T> recover_from_relaxed(const Matrix<T>& a, const Matrix<T>& z, std::size_t m) {
  require_square(a, "recover_from_relaxed");
  if (m == 0) throw ArgumentError("recover_from_relaxed requires m >= 1");
  if (z.rows() != a.rows() || z.cols() != a.cols())
    throw DimensionError("recover_from_relaxed: " + a.shape() + " vs " + z.shape());
  if (a * z * z != z) throw HypothesisViolated("A z^2 = z");
  const Matrix<T> am = power(a, m);
  const Matrix<T> h = am.adjoint() * am * a * z;
  if (h.adjoint() != h) throw HypothesisViolated("(A^m)* A^(m+1) z Hermitian");
  const auto data = drazin_data(a);
  const Matrix<T> an = power(a, data.index + 1);
  if (a * z * an != an) throw HypothesisViolated("A^n = A z A^n");
  return a * data.drazin * z;
}

} // namespace ginv
