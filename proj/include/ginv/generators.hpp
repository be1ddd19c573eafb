#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Parameters of one generated instance. Generation is a pure function of
// all four fields.
struct GenSpec {
  std::size_t dim = 3;
  std::size_t index = 1;
  std::uint64_t entry_bound = 3;
  std::uint64_t seed = 0;
};

inline void validate(const GenSpec& spec) {
  if (spec.dim < 1 || spec.dim > 8) throw SpecError("dim must be in [1, 8], got " + std::to_string(spec.dim));
  if (spec.index > spec.dim)
    throw SpecError("index " + std::to_string(spec.index) + " exceeds dim " + std::to_string(spec.dim));
  if (spec.entry_bound < 1) throw SpecError("entry bound must be positive");
}

// mt19937_64 has a fully specified output sequence; the bounded draws below
// are written out so that results do not depend on the standard library's
// distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do v = engine_(); while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
  }

  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

namespace detail {

inline BigRational random_rational(Rng& rng, std::uint64_t bound, bool nonzero = false) {
  const auto b = static_cast<std::int64_t>(bound);
  std::int64_t p;
  do p = rng.uniform(-b, b); while (nonzero && p == 0);
  return BigRational(p, rng.uniform(1, b));
}

inline GaussianRational random_gaussian(Rng& rng, std::uint64_t bound) {
  BigRational re = random_rational(rng, bound);
  BigRational im = random_rational(rng, bound);
  return {std::move(re), std::move(im)};
}

inline GaussianRational random_gaussian_integer(Rng& rng, std::uint64_t bound) {
  const auto b = static_cast<std::int64_t>(bound);
  const long re = rng.uniform(-b, b);
  const long im = rng.uniform(-b, b);
  return {BigRational(re), BigRational(im)};
}

inline GaussianRational random_unit(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational(-1);
    case 2: return GaussianRational::i();
    default: return -GaussianRational::i();
  }
}

inline CMatrix random_invertible(Rng& rng, std::size_t n, std::uint64_t bound) {
  for (;;) {
    CMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = random_gaussian(rng, bound);
    if (is_invertible(c)) return c;
  }
}

// Unit lower times upper-with-unit-modulus-diagonal, both with Gaussian
// integer entries: always invertible, and the inverse stays in Z[i].
inline CMatrix random_similarity(Rng& rng, std::size_t n, std::uint64_t bound) {
  CMatrix lower = CMatrix::identity(n);
  CMatrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    upper(i, i) = random_unit(rng);
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_gaussian_integer(rng, bound);
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_gaussian_integer(rng, bound);
  }
  return lower * upper;
}

// Nilpotent r x r matrix with nonzero entries only on the superdiagonal,
// split into Jordan-like chains of which the longest has length exactly k.
inline CMatrix random_nilpotent(Rng& rng, std::size_t r, std::size_t k, std::uint64_t bound) {
  CMatrix n(r, r);
  std::size_t start = 0;
  std::size_t chain = k;
  while (start < r) {
    for (std::size_t i = start; i + 1 < start + chain; ++i) n(i, i + 1) = random_rational(rng, bound, true);
    start += chain;
    if (start < r) chain = rng.index(1, std::min(k, r - start));
  }
  return n;
}

} // namespace detail

// Generalized signed permutation: one entry from {1, -1, i, -i} per row and
// column, hence unitary with U* = U^-1.
inline CMatrix random_signed_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(0, i - 1)]);
  CMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, perm[i]) = detail::random_unit(rng);
  return u;
}

// S (C ⊕ N) S^-1 with C invertible and N nilpotent of index exactly
// spec.index, so the result has Drazin index spec.index.
inline CMatrix gen_with_index(const GenSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.dim;
  const std::size_t k = spec.index;
  const std::size_t r = k == 0 ? 0 : rng.index(k, n);
  const CMatrix core = detail::random_invertible(rng, n - r, spec.entry_bound);
  const CMatrix nil = detail::random_nilpotent(rng, r, k, spec.entry_bound);
  const CMatrix s = detail::random_similarity(rng, n, spec.entry_bound);
  return s * direct_sum(core, nil) * inverse(s);
}

struct MatrixPair {
  CMatrix a;
  CMatrix b;
};

// a = A' ⊕ 0 and b = 0 ⊕ B' conjugated by a common unitary signed
// permutation, so that ab = ba = 0 and a* b = 0.
inline MatrixPair gen_additive_pair(const GenSpec& spec) {
  validate(spec);
  if (spec.dim < 2) throw SpecError("additive pairs need dim >= 2");
  Rng rng(spec.seed);
  const std::size_t d1 = rng.index(1, spec.dim - 1);
  const std::size_t d2 = spec.dim - d1;
  const GenSpec left{d1, rng.index(0, std::min(spec.index, d1)), spec.entry_bound, rng.next()};
  const GenSpec right{d2, rng.index(0, std::min(spec.index, d2)), spec.entry_bound, rng.next()};
  const CMatrix u = random_signed_permutation(rng, spec.dim);
  const CMatrix us = u.adjoint();
  return {u * direct_sum(gen_with_index(left), CMatrix(d2, d2)) * us,
          u * direct_sum(CMatrix(d1, d1), gen_with_index(right)) * us};
}

enum class ProductFamily {
  Diagonalizable,  // U D1 U*, U D2 U* with U a signed permutation
  ScalarIdentity,  // arbitrary a, b = r I with r real
};

inline std::string to_string(ProductFamily f) {
  return f == ProductFamily::Diagonalizable ? "diagonalizable" : "scalar-identity";
}

struct ProductPair {
  CMatrix a;
  CMatrix b;
  ProductFamily family;
};

// Pairs with ab = ba and a* b = b a*. Without an explicit family the seed's
// parity chooses one, so consecutive seeds alternate.
inline ProductPair gen_product_pair(const GenSpec& spec, std::optional<ProductFamily> family = std::nullopt) {
  validate(spec);
  const ProductFamily fam =
      family.value_or(spec.seed % 2 == 0 ? ProductFamily::Diagonalizable : ProductFamily::ScalarIdentity);
  Rng rng(spec.seed);
  const std::size_t n = spec.dim;
  if (fam == ProductFamily::Diagonalizable) {
    std::vector<GaussianRational> d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
      // a zero on the diagonal about a third of the time keeps singular cases common
      d1[i] = rng.uniform(0, 2) == 0 ? GaussianRational(0) : detail::random_gaussian(rng, spec.entry_bound);
      d2[i] = rng.uniform(0, 2) == 0 ? GaussianRational(0) : detail::random_gaussian(rng, spec.entry_bound);
    }
    const CMatrix u = random_signed_permutation(rng, n);
    const CMatrix us = u.adjoint();
    return {u * CMatrix::diagonal(d1) * us, u * CMatrix::diagonal(d2) * us, fam};
  }
  const GenSpec inner{n, rng.index(0, std::min(spec.index, n)), spec.entry_bound, rng.next()};
  const BigRational r = detail::random_rational(rng, spec.entry_bound, true);
  return {gen_with_index(inner), CMatrix::identity(n) * GaussianRational(r), fam};
}

} // namespace ginv
