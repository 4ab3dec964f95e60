#pragma once

// Independent recounts used to check the antichain enumerator. Neither
// routine shares code with the depth-first search in antichain_search.hpp.

#include <cstdint>
#include <set>
#include <vector>

#include "antichain.hpp"

namespace longray {

/// Exhaustive truth-table scan: every family of nonempty subsets of {1..n}
/// (2^(2^n - 1) indicator vectors) is tested for upward closure, and each
/// up-set is mapped to its antichain of minimal elements. Returns the number
/// of distinct antichains reached. Throws if the mapping is not injective.
inline std::uint64_t count_antichains_oracle(int n) {
  check_dimension(n, 4);
  const std::uint32_t universe = std::uint32_t{1} << n;
  const std::uint32_t nonempty = universe - 1;
  // Family bit (s - 1) records membership of subset s, s in 1..2^n-1.
  const auto member = [](std::uint64_t family, std::uint32_t s) {
    return ((family >> (s - 1)) & 1U) != 0;
  };

  std::set<std::vector<std::uint32_t>> seen;
  std::uint64_t upsets = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << nonempty); ++family) {
    bool closed = true;
    for (std::uint32_t s = 1; s < universe && closed; ++s) {
      if (!member(family, s)) continue;
      for (int i = 0; i < n; ++i) {
        if (!member(family, s | (std::uint32_t{1} << i))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ++upsets;

    std::vector<SubsetMask> members;
    for (std::uint32_t s = 1; s < universe; ++s) {
      if (member(family, s)) members.emplace_back(s);
    }
    const Antichain minimal = minimal_elements(n, members);
    std::vector<std::uint32_t> key;
    for (auto m : minimal.elements()) key.push_back(m.bits);
    seen.insert(std::move(key));
  }
  if (seen.size() != upsets) throw Error("up-set to antichain map is not injective");
  return upsets;
}

/// Counts monotone Boolean functions by splitting on the last variable:
/// a monotone f on n variables is a pair f0 <= f1 of monotone functions on
/// n - 1 variables. The tables for n - 1 variables are built level by level
/// from the constants. The function that is true on the empty input is
/// excluded, leaving the antichain count of the nonempty subsets.
inline std::uint64_t count_antichains_dp(int n) {
  check_dimension(n, kMaxEnumerationDimension);
  // Truth tables on k variables, 2^k bits each; input bitmask x maps to bit x.
  std::vector<std::uint64_t> level = {0b00, 0b10, 0b11};  // k = 1: false, x1, true
  if (n == 1) return level.size() - 1;
  for (int k = 1; k < n - 1; ++k) {
    const int width = 1 << k;
    std::vector<std::uint64_t> next;
    for (auto hi : level) {
      for (auto lo : level) {
        if ((lo & ~hi) == 0) next.push_back(lo | (hi << width));
      }
    }
    level = std::move(next);
  }
  std::uint64_t pairs = 0;
  for (auto hi : level) {
    for (auto lo : level) pairs += (lo & ~hi) == 0;
  }
  return pairs - 1;
}

}  // namespace longray
