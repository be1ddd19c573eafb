#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ginv/inverses.hpp"

namespace ginv {

// Splitting of A relative to the Hermitian idempotent p = A A^⊕:
//   A = t + s + n,  t = pAp,  s = pA(I-p),  n = (I-p)A(I-p),
// the lower-left corner (I-p)Ap being zero. c holds c_1..c_m with
// c_1 = s and c_(i+1) = t c_i + s n^i, so that c_i is the upper-right
// corner of A^i.
template <ExactField T>
struct PierceBlocks {
  Matrix<T> p;
  Matrix<T> t;
  Matrix<T> s;
  Matrix<T> n;
  std::vector<Matrix<T>> c;
};

template <ExactField T>
PierceBlocks<T> pierce_blocks(const Matrix<T>& a, std::size_t m) {
  require_square(a, "pierce_blocks");
  if (m == 0) throw ArgumentError("pierce_blocks requires m >= 1");
  PierceBlocks<T> b;
  b.p = a * core_ep(a);
  const Matrix<T> q = Matrix<T>::identity(a.rows()) - b.p;
  if (!(q * a * b.p).is_zero()) throw EngineInconsistency("pierce_blocks: (I-p)Ap != 0");
  b.t = b.p * a * b.p;
  b.s = b.p * a * q;
  b.n = q * a * q;
  b.c.reserve(m);
  b.c.push_back(b.s);
  Matrix<T> n_pow = b.n;
  for (std::size_t i = 1; i < m; ++i) {
    b.c.push_back(b.t * b.c.back() + b.s * n_pow);
    n_pow = n_pow * b.n;
  }
  return b;
}

// Group inverse of the corner t, i.e. its inverse inside pRp extended by zero.
template <ExactField T>
Matrix<T> corner_inverse(const PierceBlocks<T>& b) {
  const Matrix<T> tg = group_inverse(b.t);
  if (tg * b.t != b.p) throw EngineInconsistency("corner inverse: t^# t != p");
  return tg;
}

// t^-1 + t^-(m+1) c_m
template <ExactField T>
Matrix<T> mwg_from_blocks(const PierceBlocks<T>& b, std::size_t m) {
  if (m == 0 || b.c.size() < m)
    throw ArgumentError("mwg_from_blocks needs 1 <= m <= " + std::to_string(b.c.size()));
  const Matrix<T> tg = corner_inverse(b);
  return tg + power(tg, m + 1) * b.c[m - 1];
}

} // namespace ginv
