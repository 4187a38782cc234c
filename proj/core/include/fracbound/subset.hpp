#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fracbound/errors.hpp"

namespace fracbound {

// Subsets of a ground set {1, ..., n} as bitmasks: element i <-> bit (i-1).
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSize = 63;

inline constexpr Subset full_set(int n) { return (Subset{1} << n) - 1; }

inline constexpr Subset singleton(int i) { return Subset{1} << (i - 1); }

inline constexpr bool contains(Subset s, int i) { return (s >> (i - 1)) & 1; }

inline int subset_size(Subset s) { return std::popcount(s); }

inline constexpr Subset complement_in(Subset s, int n) { return full_set(n) & ~s; }

inline Subset checked_singleton(int i) {
  if (i < 1 || i > kMaxGroundSize)
    throw precondition_error("element " + std::to_string(i) + " outside [1, " +
                             std::to_string(kMaxGroundSize) + "]");
  return singleton(i);
}

inline Subset make_subset(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int i : elements) s |= checked_singleton(i);
  return s;
}

inline Subset make_subset(const std::vector<int>& elements) {
  Subset s = 0;
  for (int i : elements) s |= checked_singleton(i);
  return s;
}

// Elements in ascending order, 1-based.
inline std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

}  // namespace fracbound
