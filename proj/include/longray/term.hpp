#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace longray {

enum class TermKind { Coord, PosPart, NegPart, Const, Max, Min };

/// Max/min lattice term over coordinate atoms, signed coordinate parts and
/// nonnegative rational constants.
///
///   Coord(i)    x_i on a long ray factor
///   PosPart(i)  x_i on the L+ half of a long line factor, 0 on L-
///   NegPart(i)  the mirror image of PosPart(i)
///
/// Max and Min nodes hold at least two children.
class MapTerm {
 public:
  static MapTerm coord(int i) { return atom(TermKind::Coord, i); }
  static MapTerm pos_part(int i) { return atom(TermKind::PosPart, i); }
  static MapTerm neg_part(int i) { return atom(TermKind::NegPart, i); }

  static MapTerm constant(Rational q) {
    if (q < Rational(0)) throw InvalidInput("constants must be nonnegative");
    MapTerm t(TermKind::Const);
    t.value_ = q;
    return t;
  }

  static MapTerm max(std::vector<MapTerm> children) { return node(TermKind::Max, std::move(children)); }
  static MapTerm min(std::vector<MapTerm> children) { return node(TermKind::Min, std::move(children)); }

  TermKind kind() const { return kind_; }
  bool is_atom() const { return kind_ == TermKind::Coord || kind_ == TermKind::PosPart || kind_ == TermKind::NegPart; }
  /// 1-based coordinate of an atom, 0 otherwise.
  int index() const { return index_; }
  const Rational& value() const { return value_; }
  const std::vector<MapTerm>& children() const { return children_; }

  /// Largest coordinate index mentioned anywhere, 0 if none.
  int max_index() const {
    int m = index_;
    for (const auto& c : children_) m = std::max(m, c.max_index());
    return m;
  }

  bool contains(TermKind k) const {
    return kind_ == k || std::any_of(children_.begin(), children_.end(),
                                     [k](const MapTerm& c) { return c.contains(k); });
  }
  bool has_signed_atoms() const { return contains(TermKind::PosPart) || contains(TermKind::NegPart); }

  int depth() const {
    int d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth());
    return children_.empty() ? 0 : d + 1;
  }

  std::size_t node_count() const {
    std::size_t total = 1;
    for (const auto& c : children_) total += c.node_count();
    return total;
  }

  friend bool operator==(const MapTerm& a, const MapTerm& b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_ && a.value_ == b.value_ && a.children_ == b.children_;
  }

 private:
  explicit MapTerm(TermKind k) : kind_(k) {}

  static MapTerm atom(TermKind k, int i) {
    if (i < 1) throw InvalidInput("coordinate indices are 1-based");
    MapTerm t(k);
    t.index_ = i;
    return t;
  }

  static MapTerm node(TermKind k, std::vector<MapTerm> children) {
    if (children.size() < 2) throw InvalidInput("max/min need at least two arguments");
    MapTerm t(k);
    t.children_ = std::move(children);
    return t;
  }

  TermKind kind_;
  int index_ = 0;
  Rational value_;
  std::vector<MapTerm> children_;
};

/// A map into a product, one term per component.
struct VectorTerm {
  std::vector<MapTerm> components;

  std::size_t size() const { return components.size(); }
  friend bool operator==(const VectorTerm&, const VectorTerm&) = default;
};

/// (x1, ..., xn)
inline VectorTerm identity_vector(int n) {
  VectorTerm v;
  for (int i = 1; i <= n; ++i) v.components.push_back(MapTerm::coord(i));
  return v;
}

}  // namespace longray
