#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "ginv/blocks.hpp"
#include "ginv/inverses.hpp"

namespace ginv {

// Independent closed forms for the m-weak group inverse.
enum class MwgPath {
  CoreEP,       // (A^⊕)^(m+1) A^m
  PowerReduce,  // A^(m-1) (A^m)^W
  WeakPower,    // (A^W)^m A^(m-1)
  Blocks,       // t^-1 + t^-(m+1) c_m from the core-EP Pierce blocks
};

inline constexpr std::array<MwgPath, 4> kAllMwgPaths{MwgPath::CoreEP, MwgPath::PowerReduce, MwgPath::WeakPower,
                                                     MwgPath::Blocks};

constexpr std::string_view to_string(MwgPath path) {
  switch (path) {
    case MwgPath::CoreEP: return "core-ep";
    case MwgPath::PowerReduce: return "power-reduce";
    case MwgPath::WeakPower: return "weak-power";
    case MwgPath::Blocks: return "blocks";
  }
  return "?";
}

template <ExactField T>
Matrix<T> m_weak_group(const Matrix<T>& a, std::size_t m, MwgPath path = MwgPath::CoreEP) {
  require_square(a, "m_weak_group");
  if (m == 0) throw ArgumentError("m-weak group inverse requires m >= 1");
  switch (path) {
    case MwgPath::CoreEP: return power(core_ep(a), m + 1) * power(a, m);
    case MwgPath::PowerReduce: return power(a, m - 1) * weak_group(power(a, m));
    case MwgPath::WeakPower: return power(weak_group(a), m) * power(a, m - 1);
    case MwgPath::Blocks: return mwg_from_blocks(pierce_blocks(a, m), m);
  }
  throw ArgumentError("unknown path");
}

template <ExactField T>
std::array<Matrix<T>, 4> m_weak_group_all_paths(const Matrix<T>& a, std::size_t m) {
  std::array<Matrix<T>, 4> out;
  for (std::size_t i = 0; i < kAllMwgPaths.size(); ++i) out[i] = m_weak_group(a, m, kAllMwgPaths[i]);
  return out;
}

// Computes every path and throws EngineInconsistency unless all agree.
template <ExactField T>
Matrix<T> m_weak_group_agreed(const Matrix<T>& a, std::size_t m) {
  auto results = m_weak_group_all_paths(a, m);
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i] != results[0])
      throw EngineInconsistency("m-weak group paths disagree: " + std::string(to_string(kAllMwgPaths[0])) + " vs " +
                                std::string(to_string(kAllMwgPaths[i])));
  return std::move(results[0]);
}

} // namespace ginv
