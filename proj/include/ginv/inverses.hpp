#pragma once

#include <cstddef>

#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Least k >= 0 with rank(A^k) = rank(A^(k+1)). Zero iff A is invertible.
template <ExactField T>
std::size_t matrix_index(const Matrix<T>& a) {
  require_square(a, "matrix_index");
  Matrix<T> pk = Matrix<T>::identity(a.rows());
  std::size_t rank_k = a.rows();
  for (std::size_t k = 0;; ++k) {
    Matrix<T> next = pk * a;
    const std::size_t rank_next = rank(next);
    if (rank_next == rank_k) return k;
    pk = std::move(next);
    rank_k = rank_next;
  }
}

// Moore-Penrose inverse through a full-rank factorization A = FG:
// A^+ = G* (G G*)^-1 (F* F)^-1 F*. The zero matrix maps to zero.
template <ExactField T>
Matrix<T> moore_penrose(const Matrix<T>& a) {
  if (a.is_zero()) return Matrix<T>::zero(a.cols(), a.rows());
  const auto [f, g] = full_rank_factorization(a);
  const Matrix<T> fs = f.adjoint();
  const Matrix<T> gs = g.adjoint();
  return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

template <ExactField T>
struct DrazinData {
  std::size_t index = 0;
  Matrix<T> drazin;
  Matrix<T> core_ep;
};

// Drazin inverse as A^k (A^(2k+1))^+ A^k, and the core-EP inverse as the
// Drazin inverse followed by the orthogonal projector onto R(A^k).
template <ExactField T>
DrazinData<T> drazin_data(const Matrix<T>& a) {
  require_square(a, "drazin");
  DrazinData<T> out;
  out.index = matrix_index(a);
  if (out.index == 0) {
    out.drazin = inverse(a);
    out.core_ep = out.drazin;
    return out;
  }
  const Matrix<T> ak = power(a, out.index);
  const Matrix<T> a2k1 = power(a, 2 * out.index + 1);
  out.drazin = ak * moore_penrose(a2k1) * ak;
  out.core_ep = out.drazin * ak * moore_penrose(ak);
  return out;
}

template <ExactField T>
Matrix<T> drazin(const Matrix<T>& a) {
  return drazin_data(a).drazin;
}

template <ExactField T>
Matrix<T> core_ep(const Matrix<T>& a) {
  return drazin_data(a).core_ep;
}

template <ExactField T>
Matrix<T> group_inverse(const Matrix<T>& a) {
  auto data = drazin_data(a);
  if (data.index > 1) throw NotGroupInvertible(data.index);
  return std::move(data.drazin);
}

// (A^⊕)^2 A
template <ExactField T>
Matrix<T> weak_group(const Matrix<T>& a) {
  const Matrix<T> c = core_ep(a);
  return c * c * a;
}

// (A^⊕)^3 A^2
template <ExactField T>
Matrix<T> gg_inverse(const Matrix<T>& a) {
  const Matrix<T> c = core_ep(a);
  return c * c * c * a * a;
}

} // namespace ginv
