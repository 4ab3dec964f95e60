#pragma once

// Test-only helpers: random term generation and oracles that do not go
// through the library's symbolic evaluation or antichain search.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "longray/longray.hpp"

namespace longray::test_support {

/// Random lattice term over x1..xn (or p/n atoms when `signed_atoms`) with
/// decimal constants below 1000.
class TermGenerator {
 public:
  TermGenerator(int n, int max_depth, std::uint64_t seed, bool signed_atoms = false)
      : n_(n), max_depth_(max_depth), rng_(seed), signed_(signed_atoms) {}

  MapTerm operator()() { return make(max_depth_); }

  std::mt19937_64& rng() { return rng_; }

 private:
  MapTerm make(int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int roll = pick(rng_);
    if (depth == 0 || roll < 3) return leaf();
    std::uniform_int_distribution<int> arity(2, 3);
    std::vector<MapTerm> children;
    const int k = arity(rng_);
    for (int i = 0; i < k; ++i) children.push_back(make(depth - 1));
    return roll < 6 ? MapTerm::max(std::move(children)) : MapTerm::min(std::move(children));
  }

  MapTerm leaf() {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> index(1, n_);
    if (pick(rng_) == 0) {
      // Tenths in [0, 999.9].
      std::uniform_int_distribution<int> tenths(0, 9999);
      return MapTerm::constant(Rational(tenths(rng_), 10));
    }
    const int i = index(rng_);
    if (!signed_) return MapTerm::coord(i);
    return std::bernoulli_distribution(0.5)(rng_) ? MapTerm::pos_part(i) : MapTerm::neg_part(i);
  }

  int n_;
  int max_depth_;
  std::mt19937_64 rng_;
  bool signed_;
};

/// Numeric reading of I-cofinality: evaluate at the I-diagonal point with
/// x_i = t (i in I), x_j = 0 for t = 10^3 and 10^6. Returns true for cofinal
/// (value t both times), false for bounded (same value < t both times) and
/// nullopt when the two probes disagree with either pattern.
inline std::optional<bool> sentinel_cofinal(const MapTerm& f, int n, SubsetMask diagonal) {
  const auto probe = [&](std::int64_t t) {
    std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
    for (int i : diagonal.indices()) point[i - 1] = Rational(t);
    return eval_numeric(f, point);
  };
  const Rational a = probe(1000), b = probe(1000000);
  if (a == Rational(1000) && b == Rational(1000000)) return true;
  if (a == b && a < Rational(1000)) return false;
  return std::nullopt;
}

/// Same probe on a signed diagonal of L^n: x_i = t for +i, -t for -i.
inline std::optional<bool> sentinel_cofinal(const MapTerm& f, int n, SignedSubset diagonal) {
  const auto probe = [&](std::int64_t t) {
    std::vector<Rational> point(static_cast<std::size_t>(n), Rational(0));
    for (int a : diagonal.atoms()) point[(a > 0 ? a : -a) - 1] = Rational(a > 0 ? t : -t);
    return eval_long(f, point);
  };
  const Rational a = probe(1000), b = probe(1000000);
  if (a == Rational(1000) && b == Rational(1000000)) return true;
  if (a == b && a < Rational(1000)) return false;
  return std::nullopt;
}

/// Counts subsets of {0..m-1} that are pairwise incomparable under
/// `comparable` by scanning all 2^m of them.
inline std::uint64_t brute_force_antichains(int m, const std::function<bool(int, int)>& comparable) {
  std::uint64_t total = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << m); ++family) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (!((family >> a) & 1U)) continue;
      for (int b = a + 1; b < m && ok; ++b) {
        if (((family >> b) & 1U) && comparable(a, b)) ok = false;
      }
    }
    total += ok;
  }
  return total;
}

/// Every tuple of canonical representatives at dimension n, one per
/// assignment of an antichain to each component.
inline std::vector<VectorTerm> canonical_tuples(int n) {
  const auto reps = [&] {
    std::vector<MapTerm> out;
    for_each_antichain(n, [&](const Antichain& a) { out.push_back(canonical_representative(a)); });
    return out;
  }();
  std::vector<VectorTerm> tuples{VectorTerm{}};
  for (int k = 0; k < n; ++k) {
    std::vector<VectorTerm> next;
    for (const auto& t : tuples) {
      for (const auto& r : reps) {
        VectorTerm v = t;
        v.components.push_back(r);
        next.push_back(std::move(v));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

}  // namespace longray::test_support
