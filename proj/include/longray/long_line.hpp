#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "antichain_search.hpp"
#include "cofinality.hpp"
#include "subset.hpp"
#include "term.hpp"

namespace longray {

/// Largest n for which antichains of admissible signed subsets are counted.
inline constexpr int kMaxSignedCountDimension = 3;
inline constexpr int kMaxSignedListDimension = 12;

/// A subset of {+1..+n, -1..-n}. Admissible when no coordinate carries
/// both signs.
struct SignedSubset {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;

  static SignedSubset of(std::initializer_list<int> signed_indices) {
    SignedSubset s;
    for (int i : signed_indices) {
      if (i == 0 || i > kMaxDimension || -i > kMaxDimension) throw InvalidInput("signed index out of range");
      (i > 0 ? s.pos : s.neg) |= std::uint32_t{1} << ((i > 0 ? i : -i) - 1);
    }
    return s;
  }

  bool empty() const { return pos == 0 && neg == 0; }
  bool admissible() const { return (pos & neg) == 0; }
  int size() const { return std::popcount(pos) + std::popcount(neg); }
  int max_index() const { return std::bit_width(pos | neg); }
  bool is_subset_of(SignedSubset o) const { return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0; }
  bool comparable(SignedSubset o) const { return is_subset_of(o) || o.is_subset_of(*this); }

  /// Signed indices ordered +1, -1, +2, -2, ...
  std::vector<int> atoms() const {
    std::vector<int> out;
    for (int i = 1; i <= max_index(); ++i) {
      if ((pos >> (i - 1)) & 1U) out.push_back(i);
      if ((neg >> (i - 1)) & 1U) out.push_back(-i);
    }
    return out;
  }

  friend bool operator==(SignedSubset, SignedSubset) = default;
};

namespace detail {

// +i -> bit 2(i-1), -i -> bit 2(i-1)+1.
inline std::uint64_t interleave(SignedSubset s) {
  std::uint64_t out = 0;
  for (int i = 0; i < kMaxDimension; ++i) {
    out |= static_cast<std::uint64_t>((s.pos >> i) & 1U) << (2 * i);
    out |= static_cast<std::uint64_t>((s.neg >> i) & 1U) << (2 * i + 1);
  }
  return out;
}

}  // namespace detail

/// By cardinality, then lexicographically on atoms() sequences.
inline bool canonical_less(SignedSubset a, SignedSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t x = detail::interleave(a), y = detail::interleave(b);
  if (x == y) return false;
  const std::uint64_t diff = x ^ y;
  return (x & (diff & (~diff + 1))) != 0;
}

struct SignedCanonicalLess {
  bool operator()(SignedSubset a, SignedSubset b) const { return canonical_less(a, b); }
};

/// "+1", "-2"
inline std::string signed_atom_string(int a) { return (a > 0 ? "+" : "-") + std::to_string(a > 0 ? a : -a); }

inline std::string to_string(SignedSubset s) {
  std::string out = "{";
  const auto atoms = s.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ',';
    out += signed_atom_string(atoms[i]);
  }
  return out + "}";
}

inline void check_signed(SignedSubset s, int n) {
  if (s.empty()) throw InvalidInput("signed subset must be nonempty");
  if (!s.admissible()) throw InvalidInput("signed subset " + to_string(s) + " holds both signs of a coordinate");
  if (s.max_index() > n) throw InvalidInput("signed subset " + to_string(s) + " exceeds dimension");
}

/// All 3^n - 1 nonempty admissible signed subsets, canonical order.
inline std::vector<SignedSubset> admissible_subsets(int n) {
  check_dimension(n, kMaxSignedListDimension);
  std::vector<SignedSubset> out;
  std::uint32_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  out.reserve(total - 1);
  for (std::uint32_t code = 1; code < total; ++code) {
    SignedSubset s;
    std::uint32_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) s.pos |= std::uint32_t{1} << i;
      if (c % 3 == 2) s.neg |= std::uint32_t{1} << i;
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SignedCanonicalLess{});
  return out;
}

/// Pairwise incomparable nonempty admissible signed subsets, canonical order.
class SignedAntichain {
 public:
  explicit SignedAntichain(int n) : n_(n) { check_dimension(n); }

  SignedAntichain(int n, std::vector<SignedSubset> elements) : n_(n), elements_(std::move(elements)) {
    check_dimension(n);
    for (auto s : elements_) check_signed(s, n);
    std::sort(elements_.begin(), elements_.end(), SignedCanonicalLess{});
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (elements_[i].comparable(elements_[j])) {
          throw InvalidInput("signed subsets " + to_string(elements_[i]) + " and " + to_string(elements_[j]) +
                             " are comparable");
        }
      }
    }
  }

  int dimension() const { return n_; }
  const std::vector<SignedSubset>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const SignedAntichain&, const SignedAntichain&) = default;

 private:
  int n_;
  std::vector<SignedSubset> elements_;
};

/// Up-set within the admissible signed subsets.
class SignedUpSet {
 public:
  SignedUpSet(int n, std::vector<SignedSubset> members) : n_(n), members_(std::move(members)) {
    for (auto s : members_) check_signed(s, n);
    std::sort(members_.begin(), members_.end(), SignedCanonicalLess{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto s : members_) {
      for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if ((s.pos | s.neg) & bit) continue;
        if (!contains({s.pos | bit, s.neg}) || !contains({s.pos, s.neg | bit})) {
          throw InvalidInput("signed family is not upward closed at " + to_string(s));
        }
      }
    }
  }

  int dimension() const { return n_; }
  const std::vector<SignedSubset>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(SignedSubset s) const {
    return std::binary_search(members_.begin(), members_.end(), s, SignedCanonicalLess{});
  }

  friend bool operator==(const SignedUpSet&, const SignedUpSet&) = default;

 private:
  int n_;
  std::vector<SignedSubset> members_;
};

inline SignedAntichain minimal_signed_elements(int n, std::span<const SignedSubset> family) {
  std::vector<SignedSubset> sorted(family.begin(), family.end());
  for (auto s : sorted) check_signed(s, n);
  std::sort(sorted.begin(), sorted.end(), SignedCanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<SignedSubset> minimal;
  for (auto s : sorted) {
    if (std::none_of(minimal.begin(), minimal.end(), [s](SignedSubset m) { return m.is_subset_of(s); })) {
      minimal.push_back(s);
    }
  }
  return SignedAntichain(n, std::move(minimal));
}

inline SignedUpSet signed_upward_closure(const SignedAntichain& a) {
  std::vector<SignedSubset> members;
  for (auto s : admissible_subsets(a.dimension())) {
    if (std::any_of(a.elements().begin(), a.elements().end(), [s](SignedSubset m) { return m.is_subset_of(s); })) {
      members.push_back(s);
    }
  }
  return SignedUpSet(a.dimension(), std::move(members));
}

namespace detail {

inline void require_long_line_term(const MapTerm& f, int n) {
  check_dimension(n, kMaxSignedListDimension);
  if (f.contains(TermKind::Coord)) throw InvalidInput("coordinate atom x<i> in a map on L^n; use p<i>/n<i>");
  if (f.max_index() > n) throw InvalidInput("term index exceeds dimension " + std::to_string(n));
}

}  // namespace detail

/// Whether f is unbounded along the signed diagonal: x_i = t for +i in I,
/// x_i = -t for -i in I, x_j = 0 otherwise.
inline Signature signed_diagonal_signature(const MapTerm& f, SignedSubset diagonal) {
  if (diagonal.empty() || !diagonal.admissible()) throw InvalidInput("signed diagonal must be nonempty and admissible");
  if (f.contains(TermKind::Coord)) throw InvalidInput("coordinate atom x<i> in a map on L^n; use p<i>/n<i>");
  return Signature{detail::eval_two_valued(f, [diagonal](const MapTerm& atom) {
    const std::uint32_t bit = std::uint32_t{1} << (atom.index() - 1);
    return atom.kind() == TermKind::PosPart ? (diagonal.pos & bit) != 0 : (diagonal.neg & bit) != 0;
  })};
}

inline SignedUpSet signed_cofinality_class(const MapTerm& f, int n) {
  detail::require_long_line_term(f, n);
  std::vector<SignedSubset> members;
  for (auto s : admissible_subsets(n)) {
    if (signed_diagonal_signature(f, s) == Signature::Cofinal) members.push_back(s);
  }
  return SignedUpSet(n, std::move(members));
}

/// The class of f: L^n -> R.
inline SignedAntichain signed_homotopy_class(const MapTerm& f, int n) {
  const auto cls = signed_cofinality_class(f, n);
  return minimal_signed_elements(n, cls.members());
}

/// max over elements of min over atoms, p<i> for +i and n<i> for -i; the
/// constant 0 for the empty antichain.
inline MapTerm signed_canonical_representative(const SignedAntichain& a) {
  if (a.empty()) return MapTerm::constant(Rational(0));
  std::vector<MapTerm> terms;
  for (auto s : a.elements()) {
    std::vector<MapTerm> atoms;
    for (int i : s.atoms()) atoms.push_back(i > 0 ? MapTerm::pos_part(i) : MapTerm::neg_part(-i));
    terms.push_back(atoms.size() == 1 ? atoms.front() : MapTerm::min(std::move(atoms)));
  }
  return terms.size() == 1 ? terms.front() : MapTerm::max(std::move(terms));
}

/// Numeric evaluation at a point of L^n, identified with Q^n (L+ positive).
inline Rational eval_long(const MapTerm& f, std::span<const Rational> point) {
  if (f.contains(TermKind::Coord)) throw InvalidInput("coordinate atom x<i> in a map on L^n");
  if (f.max_index() > static_cast<int>(point.size())) throw InvalidInput("point too short for term");
  return detail::eval_rational(f, [point](const MapTerm& atom) {
    const Rational& x = point[atom.index() - 1];
    if (atom.kind() == TermKind::PosPart) return std::max(x, Rational(0));
    return std::max(-x, Rational(0));
  });
}

namespace detail {

inline AntichainSearch signed_search(const std::vector<SignedSubset>& order) {
  std::vector<std::uint64_t> comparable(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (i != j && order[i].comparable(order[j])) comparable[i] |= std::uint64_t{1} << j;
    }
  }
  return AntichainSearch(comparable);
}

}  // namespace detail

/// Streams every antichain of the admissible signed subsets, empty first.
template <class Visitor>
void for_each_signed_antichain(int n, Visitor&& visit) {
  check_dimension(n, kMaxSignedCountDimension);
  const auto order = admissible_subsets(n);
  std::vector<SignedSubset> buffer;
  detail::signed_search(order).for_each([&](std::span<const int> chosen) {
    buffer.clear();
    for (int e : chosen) buffer.push_back(order[e]);
    visit(SignedAntichain(n, buffer));
  });
}

/// |[L^n, R]|: antichains of the admissible signed subsets, empty included.
inline std::uint64_t count_classes_Ln_to_R(int n) {
  check_dimension(n, kMaxSignedCountDimension);
  return detail::signed_search(admissible_subsets(n)).count();
}

/// Which half of the long line an unbounded map R^n -> L escapes into.
enum class LongEnd { Plus, Minus };

/// A class of [R^n, L]. Bounded maps into either half are one class.
class ClassIntoL {
 public:
  enum class Tag { Bounded, Plus, Minus };

  static ClassIntoL bounded(int n) { return ClassIntoL(Tag::Bounded, Antichain(n)); }
  static ClassIntoL unbounded(LongEnd end, Antichain a) {
    if (a.empty()) throw InvalidInput("an unbounded class needs a nonempty antichain");
    return ClassIntoL(end == LongEnd::Plus ? Tag::Plus : Tag::Minus, std::move(a));
  }

  Tag tag() const { return tag_; }
  /// Empty for the bounded class.
  const Antichain& antichain() const { return antichain_; }

  friend bool operator==(const ClassIntoL&, const ClassIntoL&) = default;

 private:
  ClassIntoL(Tag t, Antichain a) : tag_(t), antichain_(std::move(a)) {}
  Tag tag_;
  Antichain antichain_;
};

/// Class of the map R^n -> L given by f into the `end` copy of R.
inline ClassIntoL classify_Rn_to_L(LongEnd end, const MapTerm& f, int n) {
  auto a = homotopy_class(f, n);
  if (a.empty()) return ClassIntoL::bounded(n);
  return ClassIntoL::unbounded(end, std::move(a));
}

/// |[R^n, L]| = 2 (|[R^n, R]| - 1) + 1.
inline std::uint64_t count_classes_Rn_to_L(int n) { return 2 * (count_antichains(n) - 1) + 1; }

}  // namespace longray
