#pragma once

#include <span>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "subset.hpp"
#include "term.hpp"

namespace longray {

/// Behaviour of a map restricted to one diagonal: unbounded or bounded.
enum class Signature : bool { Bounded = false, Cofinal = true };

inline const char* to_string(Signature s) { return s == Signature::Cofinal ? "cofinal" : "bounded"; }

namespace detail {

inline void require_unsigned(const MapTerm& f) {
  if (f.has_signed_atoms()) throw InvalidInput("signed atom in a map on R^n");
}

inline void require_within(const MapTerm& f, int n) {
  check_dimension(n);
  if (f.max_index() > n) {
    throw InvalidInput("term mentions x" + std::to_string(f.max_index()) + " but n = " + std::to_string(n));
  }
}

// Two-valued evaluation: `atom_value(t)` decides each atom; constants are
// bounded, max is join and min is meet.
template <class AtomValue>
bool eval_two_valued(const MapTerm& f, const AtomValue& atom_value) {
  switch (f.kind()) {
    case TermKind::Const: return false;
    case TermKind::Max:
      for (const auto& c : f.children()) {
        if (eval_two_valued(c, atom_value)) return true;
      }
      return false;
    case TermKind::Min:
      for (const auto& c : f.children()) {
        if (!eval_two_valued(c, atom_value)) return false;
      }
      return true;
    default: return atom_value(f);
  }
}

template <class AtomValue>
Rational eval_rational(const MapTerm& f, const AtomValue& atom_value) {
  switch (f.kind()) {
    case TermKind::Const: return f.value();
    case TermKind::Max:
    case TermKind::Min: {
      Rational best = eval_rational(f.children().front(), atom_value);
      for (std::size_t i = 1; i < f.children().size(); ++i) {
        const Rational v = eval_rational(f.children()[i], atom_value);
        best = f.kind() == TermKind::Max ? std::max(best, v) : std::min(best, v);
      }
      return best;
    }
    default: return atom_value(f);
  }
}

}  // namespace detail

/// Whether f is unbounded on the I-diagonal {x_i = t for i in I, x_j = 0
/// otherwise}. On a lattice term each x_i with i in I is replaced by
/// "cofinal" and every other atom or constant by "bounded": restricted to
/// the diagonal a lattice term is eventually t or eventually constant, so
/// this two-valued reading is exact.
inline Signature diagonal_signature(const MapTerm& f, SubsetMask diagonal) {
  if (diagonal.empty()) throw InvalidInput("diagonal index set must be nonempty");
  detail::require_unsigned(f);
  return Signature{detail::eval_two_valued(
      f, [diagonal](const MapTerm& atom) { return diagonal.contains(atom.index()); })};
}

/// All nonempty I for which f is I-cofinal; always an up-set.
inline UpSet cofinality_class(const MapTerm& f, int n) {
  detail::require_within(f, n);
  detail::require_unsigned(f);
  std::vector<SubsetMask> members;
  for (auto s : nonempty_subsets(n)) {
    if (diagonal_signature(f, s) == Signature::Cofinal) members.push_back(s);
  }
  return UpSet(n, members);
}

/// Minimal elements of the cofinality class: the complete homotopy
/// invariant of a map R^n -> R.
inline Antichain homotopy_class(const MapTerm& f, int n) { return minimal_elements(cofinality_class(f, n)); }

inline bool homotopic(const MapTerm& f, const MapTerm& g, int n) {
  return cofinality_class(f, n) == cofinality_class(g, n);
}

/// min over the members of each element, max over the elements; the
/// constant 0 for the empty antichain. Singleton min/max nodes are elided.
inline MapTerm canonical_representative(const Antichain& a) {
  if (a.empty()) return MapTerm::constant(Rational(0));
  std::vector<MapTerm> terms;
  for (auto s : a.elements()) {
    std::vector<MapTerm> atoms;
    for (int i : s.indices()) atoms.push_back(MapTerm::coord(i));
    terms.push_back(atoms.size() == 1 ? atoms.front() : MapTerm::min(std::move(atoms)));
  }
  return terms.size() == 1 ? terms.front() : MapTerm::max(std::move(terms));
}

/// Replaces every Coord(i) in f by g[i-1]. Signed atoms are left alone.
inline MapTerm substitute(const MapTerm& f, const VectorTerm& g) {
  switch (f.kind()) {
    case TermKind::Coord:
      if (f.index() > static_cast<int>(g.size())) {
        throw InvalidInput("x" + std::to_string(f.index()) + " has no substitute");
      }
      return g.components[f.index() - 1];
    case TermKind::Max:
    case TermKind::Min: {
      std::vector<MapTerm> children;
      children.reserve(f.children().size());
      for (const auto& c : f.children()) children.push_back(substitute(c, g));
      return f.kind() == TermKind::Max ? MapTerm::max(std::move(children)) : MapTerm::min(std::move(children));
    }
    default: return f;
  }
}

/// f o g, purely syntactic.
inline VectorTerm compose(const VectorTerm& f, const VectorTerm& g) {
  if (f.size() != g.size()) {
    throw InvalidInput("cannot compose maps of dimensions " + std::to_string(f.size()) + " and " +
                       std::to_string(g.size()));
  }
  VectorTerm out;
  out.components.reserve(f.size());
  for (const auto& c : f.components) out.components.push_back(substitute(c, g));
  return out;
}

/// Ordinary max/min evaluation at a point of the closed positive orthant.
inline Rational eval_numeric(const MapTerm& f, std::span<const Rational> point) {
  detail::require_unsigned(f);
  if (f.max_index() > static_cast<int>(point.size())) {
    throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, term needs " +
                       std::to_string(f.max_index()));
  }
  for (const auto& x : point) {
    if (x < Rational(0)) throw InvalidInput("point coordinates must be nonnegative");
  }
  return detail::eval_rational(f, [point](const MapTerm& atom) { return point[atom.index() - 1]; });
}

inline std::vector<Rational> eval_numeric(const VectorTerm& f, std::span<const Rational> point) {
  std::vector<Rational> out;
  for (const auto& c : f.components) out.push_back(eval_numeric(c, point));
  return out;
}

}  // namespace longray
