#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace longray {

inline constexpr int kMaxDimension = 16;

inline void check_dimension(int n, int max = kMaxDimension) {
  if (n < 1 || n > max) {
    throw InvalidInput("dimension " + std::to_string(n) +
                       " outside supported range 1.." + std::to_string(max));
  }
}

/// A subset of {1..n} stored as a bit set; bit i-1 holds index i.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  static SubsetMask of(std::initializer_list<int> indices) {
    return of(std::span<const int>(indices.begin(), indices.size()));
  }
  static SubsetMask of(std::span<const int> indices) {
    SubsetMask s;
    for (int i : indices) {
      if (i < 1 || i > kMaxDimension) {
        throw InvalidInput("subset index " + std::to_string(i) + " out of range");
      }
      s.bits |= std::uint32_t{1} << (i - 1);
    }
    return s;
  }
  /// {1..n}
  static constexpr SubsetMask full(int n) {
    return SubsetMask((std::uint32_t{1} << n) - 1);
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> (i - 1)) & 1U; }
  constexpr bool is_subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }
  constexpr bool comparable(SubsetMask o) const {
    return is_subset_of(o) || o.is_subset_of(*this);
  }
  /// Largest index present, 0 for the empty set.
  constexpr int max_index() const { return std::bit_width(bits); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
};

/// Canonical subset order: by cardinality, ties broken lexicographically on
/// the increasing index lists ({1,2} < {1,3} < {2,3}).
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.bits == b.bits) return false;
  // The first index present in exactly one of them decides: whoever holds it
  // is lexicographically smaller.
  const std::uint32_t diff = a.bits ^ b.bits;
  const std::uint32_t low = diff & (~diff + 1);
  return (a.bits & low) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(SubsetMask a, SubsetMask b) const {
    return canonical_less(a, b);
  }
};

/// All 2^n - 1 nonempty subsets of {1..n} in canonical order.
inline std::vector<SubsetMask> nonempty_subsets(int n) {
  check_dimension(n);
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << n); ++b) out.emplace_back(b);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// Inverse of nonempty_subsets: rank[bits] is the canonical position of the
/// subset, rank[0] is unused.
inline std::vector<int> canonical_ranks(int n) {
  const auto subsets = nonempty_subsets(n);
  std::vector<int> rank(std::size_t{1} << n, -1);
  for (std::size_t r = 0; r < subsets.size(); ++r) rank[subsets[r].bits] = static_cast<int>(r);
  return rank;
}

/// "{1,2}"
inline std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

inline void check_within(SubsetMask s, int n) {
  if (s.max_index() > n) {
    throw InvalidInput("subset " + to_string(s) + " exceeds dimension " + std::to_string(n));
  }
}

}  // namespace longray
