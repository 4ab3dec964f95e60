#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"

namespace longray::detail {

/// Depth-first antichain search over a finite poset of at most 64 elements.
/// Element e is described by `comparable[e]`, the mask of elements distinct
/// from e that are comparable to it. Antichains are produced as increasing
/// index sequences in lexicographic order, prefixes first, so the empty
/// antichain always comes first.
class AntichainSearch {
 public:
  explicit AntichainSearch(std::span<const std::uint64_t> comparable)
      : comparable_(comparable.begin(), comparable.end()) {
    if (comparable_.size() > 64) throw InvalidInput("antichain search limited to 64 elements");
  }

  std::size_t size() const { return comparable_.size(); }

  /// visit(std::span<const int>) is called once per antichain.
  template <class Visitor>
  void for_each(Visitor&& visit) const {
    std::vector<int> chosen;
    chosen.reserve(comparable_.size());
    walk(all_mask(), chosen, visit);
  }

  std::uint64_t count() const { return count_from(all_mask()); }

 private:
  std::uint64_t all_mask() const {
    return comparable_.size() == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << comparable_.size()) - 1;
  }

  template <class Visitor>
  void walk(std::uint64_t candidates, std::vector<int>& chosen, Visitor& visit) const {
    visit(std::span<const int>(chosen));
    while (candidates != 0) {
      const int e = std::countr_zero(candidates);
      candidates &= candidates - 1;
      chosen.push_back(e);
      walk(candidates & ~comparable_[e], chosen, visit);
      chosen.pop_back();
    }
  }

  // Each call counts the antichains whose remaining elements lie in `candidates`
  // and are larger than everything already chosen.
  std::uint64_t count_from(std::uint64_t candidates) const {
    std::uint64_t total = 1;
    while (candidates != 0) {
      const int e = std::countr_zero(candidates);
      candidates &= candidates - 1;
      total += count_from(candidates & ~comparable_[e]);
    }
    return total;
  }

  std::vector<std::uint64_t> comparable_;
};

}  // namespace longray::detail
