#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cofinality.hpp"
#include "subset.hpp"
#include "term.hpp"

namespace longray {

inline constexpr int kMaxMatrixDimension = 8;

/// Square zero/one matrix; product is taken in the Boolean semiring.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t size) : size_(size), cells_(size * size, 0) {}

  static BoolMatrix identity(std::size_t size) {
    BoolMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t size() const { return size_; }
  bool at(std::size_t r, std::size_t c) const { return cells_[r * size_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { cells_[r * size_ + c] = v ? 1 : 0; }

  /// True when no row holds more than one 1.
  bool rows_unique() const {
    for (std::size_t r = 0; r < size_; ++r) {
      int ones = 0;
      for (std::size_t c = 0; c < size_; ++c) ones += at(r, c);
      if (ones > 1) return false;
    }
    return true;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> cells_;
};

inline BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("matrix size mismatch");
  BoolMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t m = 0; m < a.size(); ++m) {
      if (!a.at(r, m)) continue;
      for (std::size_t c = 0; c < a.size(); ++c) {
        if (b.at(m, c)) out.set(r, c, true);
      }
    }
  }
  return out;
}

/// Direction matrix of a self-map of R^n. Rows and columns are indexed by
/// the nonempty subsets of {1..n} in canonical order; entry (I,J) is 1 when
/// the image of the I-diagonal runs off along the J-diagonal.
class DirectionMatrix {
 public:
  explicit DirectionMatrix(int n)
      : n_((check_dimension(n, kMaxMatrixDimension), n)),
        subsets_(nonempty_subsets(n)),
        ranks_(canonical_ranks(n)),
        entries_(subsets_.size()) {}

  DirectionMatrix(int n, BoolMatrix entries) : DirectionMatrix(n) {
    if (entries.size() != subsets_.size()) throw InvalidInput("matrix does not match dimension");
    entries_ = std::move(entries);
  }

  static DirectionMatrix identity(int n) {
    DirectionMatrix d(n);
    d.entries_ = BoolMatrix::identity(d.subsets_.size());
    return d;
  }

  int dimension() const { return n_; }
  const BoolMatrix& entries() const { return entries_; }
  const std::vector<SubsetMask>& index_order() const { return subsets_; }

  bool at(SubsetMask row, SubsetMask col) const { return entries_.at(rank(row), rank(col)); }
  void set(SubsetMask row, SubsetMask col, bool v) { entries_.set(rank(row), rank(col), v); }

  /// The J with a 1 in row I, nullopt for a zero row. Rows with several 1s
  /// report the first in canonical order.
  std::optional<SubsetMask> target(SubsetMask row) const {
    const std::size_t r = rank(row);
    for (std::size_t c = 0; c < subsets_.size(); ++c) {
      if (entries_.at(r, c)) return subsets_[c];
    }
    return std::nullopt;
  }

  bool rows_unique() const { return entries_.rows_unique(); }

  friend bool operator==(const DirectionMatrix& a, const DirectionMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rank(SubsetMask s) const {
    if (s.empty()) throw InvalidInput("direction matrices are indexed by nonempty subsets");
    check_within(s, n_);
    return static_cast<std::size_t>(ranks_[s.bits]);
  }

  int n_;
  std::vector<SubsetMask> subsets_;
  std::vector<int> ranks_;
  BoolMatrix entries_;
};

inline DirectionMatrix bool_mat_mul(const DirectionMatrix& a, const DirectionMatrix& b) {
  if (a.dimension() != b.dimension()) throw InvalidInput("direction matrices of different dimensions");
  return DirectionMatrix(a.dimension(), a.entries() * b.entries());
}

/// Row I has its 1 at J = {k : f_k is I-cofinal}, and is zero when every
/// component is bounded on the I-diagonal.
inline DirectionMatrix direction_matrix(const VectorTerm& f, int n) {
  check_dimension(n, kMaxMatrixDimension);
  if (static_cast<int>(f.size()) != n) {
    throw InvalidInput("self-map of R^" + std::to_string(n) + " needs " + std::to_string(n) +
                       " components, got " + std::to_string(f.size()));
  }
  for (const auto& c : f.components) {
    detail::require_within(c, n);
    detail::require_unsigned(c);
  }
  DirectionMatrix d(n);
  for (auto row : d.index_order()) {
    SubsetMask image;
    for (int k = 1; k <= n; ++k) {
      if (diagonal_signature(f.components[k - 1], row) == Signature::Cofinal) {
        image.bits |= std::uint32_t{1} << (k - 1);
      }
    }
    if (!image.empty()) d.set(row, image, true);
  }
  return d;
}

/// D(f o g) == D(g) * D(f).
inline bool verify_monoid_law(const VectorTerm& f, const VectorTerm& g, int n) {
  return direction_matrix(compose(f, g), n) == bool_mat_mul(direction_matrix(g, n), direction_matrix(f, n));
}

/// Equal direction matrices. Two self-maps with this property have
/// componentwise equal cofinality classes; treating them as homotopic
/// applies the R^n -> R classification to each component.
inline bool homotopic_self_maps(const VectorTerm& f, const VectorTerm& g, int n) {
  return direction_matrix(f, n) == direction_matrix(g, n);
}

}  // namespace longray
