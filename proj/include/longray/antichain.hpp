#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "antichain_search.hpp"
#include "subset.hpp"

namespace longray {

namespace detail {
struct AntichainAccess;
}

/// Largest dimension for which antichains of the Boolean lattice are
/// enumerated or counted.
inline constexpr int kMaxEnumerationDimension = 6;

/// A family of pairwise incomparable nonempty subsets of {1..n}, kept in
/// canonical order. The empty antichain is a valid value.
class Antichain {
 public:
  explicit Antichain(int n) : n_(n) { check_dimension(n); }

  /// Validates and sorts; throws InvalidInput on empty members, duplicates,
  /// comparable pairs or indices above n.
  Antichain(int n, std::vector<SubsetMask> elements) : n_(n), elements_(std::move(elements)) {
    check_dimension(n);
    for (auto s : elements_) {
      if (s.empty()) throw InvalidInput("antichain member must be nonempty");
      check_within(s, n);
    }
    std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (elements_[i].comparable(elements_[j])) {
          throw InvalidInput("subsets " + to_string(elements_[i]) + " and " +
                             to_string(elements_[j]) + " are comparable");
        }
      }
    }
  }

  int dimension() const { return n_; }
  const std::vector<SubsetMask>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  friend struct detail::AntichainAccess;
  struct Trusted {};
  Antichain(int n, std::vector<SubsetMask> elements, Trusted) : n_(n), elements_(std::move(elements)) {}

  int n_;
  std::vector<SubsetMask> elements_;
};

/// Lexicographic on the canonical element sequences, a proper prefix first.
inline bool canonical_less(const Antichain& a, const Antichain& b) {
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end(),
                                      CanonicalLess{});
}

/// "{1},{2,3}" (empty string for the empty antichain).
inline std::string to_string(const Antichain& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += to_string(a.elements()[i]);
  }
  return out;
}

/// An upward closed family of nonempty subsets of {1..n}.
class UpSet {
 public:
  explicit UpSet(int n) : n_(n), indicator_((check_dimension(n), std::size_t{1} << n), false) {}

  /// Throws InvalidInput unless `members` is upward closed in the nonempty
  /// subsets of {1..n}.
  UpSet(int n, std::span<const SubsetMask> members) : UpSet(n) {
    for (auto s : members) {
      if (s.empty()) throw InvalidInput("up-set member must be nonempty");
      check_within(s, n);
      indicator_[s.bits] = true;
    }
    for (std::uint32_t b = 1; b < indicator_.size(); ++b) {
      if (!indicator_[b]) continue;
      for (int i = 0; i < n; ++i) {
        if (!indicator_[b | (std::uint32_t{1} << i)]) {
          throw InvalidInput("family is not upward closed at " + to_string(SubsetMask(b)));
        }
      }
    }
  }

  int dimension() const { return n_; }
  bool contains(SubsetMask s) const { return s.bits < indicator_.size() && indicator_[s.bits]; }
  bool empty() const { return std::none_of(indicator_.begin(), indicator_.end(), [](bool b) { return b; }); }

  /// Members in canonical order.
  std::vector<SubsetMask> members() const {
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 1; b < indicator_.size(); ++b) {
      if (indicator_[b]) out.emplace_back(b);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  friend bool operator==(const UpSet&, const UpSet&) = default;

 private:
  friend UpSet upward_closure(const Antichain& a);
  int n_;
  std::vector<bool> indicator_;
};

/// Inclusion-minimal members of `family`, canonically ordered.
inline Antichain minimal_elements(int n, std::span<const SubsetMask> family) {
  check_dimension(n);
  std::vector<SubsetMask> distinct(family.begin(), family.end());
  for (auto s : distinct) {
    if (s.empty()) throw InvalidInput("family contains the empty subset");
    check_within(s, n);
  }
  std::sort(distinct.begin(), distinct.end(), CanonicalLess{});
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // In canonical order every proper subset precedes its supersets.
  std::vector<SubsetMask> minimal;
  for (auto s : distinct) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [s](SubsetMask m) { return m.is_subset_of(s); });
    if (!dominated) minimal.push_back(s);
  }
  return Antichain(n, std::move(minimal));
}

inline Antichain minimal_elements(const UpSet& u) {
  const auto members = u.members();
  return minimal_elements(u.dimension(), members);
}

/// Smallest up-set containing every member of `a`.
inline UpSet upward_closure(const Antichain& a) {
  UpSet u(a.dimension());
  const std::uint32_t limit = std::uint32_t{1} << a.dimension();
  for (std::uint32_t b = 1; b < limit; ++b) {
    const SubsetMask s(b);
    u.indicator_[b] = std::any_of(a.elements().begin(), a.elements().end(),
                                  [s](SubsetMask m) { return m.is_subset_of(s); });
  }
  return u;
}

namespace detail {

// Builds antichains whose members are already known to be canonical.
struct AntichainAccess {
  static Antichain trusted(int n, std::vector<SubsetMask> elements) {
    return Antichain(n, std::move(elements), Antichain::Trusted{});
  }
};

inline AntichainSearch boolean_lattice_search(const std::vector<SubsetMask>& order) {
  std::vector<std::uint64_t> comparable(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (i != j && order[i].comparable(order[j])) comparable[i] |= std::uint64_t{1} << j;
    }
  }
  return AntichainSearch(comparable);
}

}  // namespace detail

/// Streams every antichain of the nonempty subsets of {1..n}, the empty
/// antichain first, in canonical (lexicographic) order without duplicates.
/// visit receives a const Antichain&.
template <class Visitor>
void for_each_antichain(int n, Visitor&& visit) {
  check_dimension(n, kMaxEnumerationDimension);
  const auto order = nonempty_subsets(n);
  const auto search = detail::boolean_lattice_search(order);
  std::vector<SubsetMask> buffer;
  search.for_each([&](std::span<const int> chosen) {
    buffer.clear();
    for (int e : chosen) buffer.push_back(order[e]);
    visit(detail::AntichainAccess::trusted(n, buffer));
  });
}

inline std::vector<Antichain> enumerate_antichains(int n) {
  std::vector<Antichain> out;
  for_each_antichain(n, [&](const Antichain& a) { out.push_back(a); });
  return out;
}

/// Number of antichains of the nonempty subsets of {1..n}, the empty
/// antichain included. Equals the Dedekind number minus one.
inline std::uint64_t count_antichains(int n) {
  check_dimension(n, kMaxEnumerationDimension);
  return detail::boolean_lattice_search(nonempty_subsets(n)).count();
}

}  // namespace longray
