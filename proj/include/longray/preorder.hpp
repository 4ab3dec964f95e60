#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "antichain_search.hpp"
#include "errors.hpp"

namespace longray {

inline constexpr int kMaxPreorderSize = 24;

/// Transitive closure of a generating relation on {1..k}.
///
/// A pair (i,i) is present only when i lies on a cycle of generators, so
/// `precedes(i, i)` carries information. Antichains are taken over distinct
/// elements: a loop at i never excludes the singleton {i}.
class FinitePreorder {
 public:
  explicit FinitePreorder(int k) : k_(k), rows_(static_cast<std::size_t>(k), 0) {
    if (k < 1 || k > kMaxPreorderSize) {
      throw InvalidInput("preorder size " + std::to_string(k) + " outside 1.." +
                         std::to_string(kMaxPreorderSize));
    }
  }

  int size() const { return k_; }

  /// 1-based.
  bool precedes(int i, int j) const {
    check_index(i);
    check_index(j);
    return (rows_[i - 1] >> (j - 1)) & 1U;
  }
  bool comparable(int i, int j) const { return precedes(i, j) || precedes(j, i); }
  bool has_loop(int i) const { return precedes(i, i); }

  /// All related pairs (i,j), 1-based, sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k_; ++i) {
      for (int j = 1; j <= k_; ++j) {
        if (precedes(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// Bit j-1 of row i-1 is set iff i precedes j.
  std::span<const std::uint32_t> rows() const { return rows_; }

  friend bool operator==(const FinitePreorder&, const FinitePreorder&) = default;

 private:
  friend FinitePreorder preorder_from_generators(int, std::span<const std::pair<int, int>>);

  void check_index(int i) const {
    if (i < 1 || i > k_) throw InvalidInput("preorder index " + std::to_string(i) + " out of range");
  }

  int k_;
  std::vector<std::uint32_t> rows_;
};

inline FinitePreorder preorder_from_generators(int k, std::span<const std::pair<int, int>> generators) {
  FinitePreorder p(k);
  for (auto [i, j] : generators) {
    p.check_index(i);
    p.check_index(j);
    p.rows_[i - 1] |= std::uint32_t{1} << (j - 1);
  }
  // Warshall on bit rows.
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < k; ++i) {
      if ((p.rows_[i] >> m) & 1U) p.rows_[i] |= p.rows_[m];
    }
  }
  return p;
}

/// Relation of an existing preorder closed again; a no-op on any output of
/// preorder_from_generators.
inline FinitePreorder transitive_closure(const FinitePreorder& p) {
  return preorder_from_generators(p.size(), p.pairs());
}

namespace detail {

inline AntichainSearch preorder_search(const FinitePreorder& p) {
  const int k = p.size();
  std::vector<std::uint64_t> comparable(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i != j && p.comparable(i, j)) comparable[i - 1] |= std::uint64_t{1} << (j - 1);
    }
  }
  return AntichainSearch(comparable);
}

}  // namespace detail

/// Number of subsets of {1..k} whose distinct members are pairwise
/// incomparable, the empty set included.
inline std::uint64_t count_preorder_antichains(const FinitePreorder& p) {
  return detail::preorder_search(p).count();
}

/// visit(std::span<const int>) receives each antichain as increasing 1-based
/// indices, empty first, in lexicographic order.
template <class Visitor>
void for_each_preorder_antichain(const FinitePreorder& p, Visitor&& visit) {
  std::vector<int> one_based;
  detail::preorder_search(p).for_each([&](std::span<const int> chosen) {
    one_based.assign(chosen.begin(), chosen.end());
    for (int& i : one_based) ++i;
    visit(std::span<const int>(one_based));
  });
}

/// Relabels element i as perm[i-1] (perm is a permutation of 1..k).
inline FinitePreorder relabel(const FinitePreorder& p, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != p.size()) throw InvalidInput("permutation size mismatch");
  std::vector<std::pair<int, int>> moved;
  for (auto [i, j] : p.pairs()) moved.emplace_back(perm[i - 1], perm[j - 1]);
  return preorder_from_generators(p.size(), moved);
}

/// Backtracking isomorphism test; practical for the small sizes used by the
/// pipe checks.
inline bool isomorphic(const FinitePreorder& a, const FinitePreorder& b) {
  const int k = a.size();
  if (b.size() != k) return false;
  const auto signature = [](const FinitePreorder& p, int i) {
    int out = 0, in = 0;
    for (int j = 1; j <= p.size(); ++j) {
      out += p.precedes(i, j);
      in += p.precedes(j, i);
    }
    return std::tuple{out, in, p.has_loop(i)};
  };
  std::vector<int> image(static_cast<std::size_t>(k), 0);
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);

  const auto extend = [&](auto& self, int i) -> bool {
    if (i > k) return true;
    for (int c = 1; c <= k; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      bool ok = true;
      for (int j = 1; j < i && ok; ++j) {
        ok = a.precedes(i, j) == b.precedes(c, image[j - 1]) &&
             a.precedes(j, i) == b.precedes(image[j - 1], c);
      }
      if (!ok || a.has_loop(i) != b.has_loop(c)) continue;
      image[i - 1] = c;
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(extend, 1);
}

}  // namespace longray
