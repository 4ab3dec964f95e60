#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "preorder.hpp"

namespace longray {

enum class Arrow : std::uint8_t { Up, Down };

/// Arrow sequence (s_1, ..., s_k) describing how k copies of the half-plane
/// piece {y <= x} are glued into a pipe. Copy i meets copy i+1 along the edge
/// ray Delta_{i+1}; indices are cyclic, copy k meets copy 1.
class PipeCode {
 public:
  explicit PipeCode(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
    if (arrows_.empty()) throw InvalidInput("pipe code must be nonempty");
    if (arrows_.size() > kMaxPreorderSize) {
      throw InvalidInput("pipe code longer than " + std::to_string(kMaxPreorderSize));
    }
  }

  /// "UUD" style; 'U'/'u' for up, 'D'/'d' for down.
  static PipeCode parse(std::string_view text) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'U': case 'u': arrows.push_back(Arrow::Up); break;
        case 'D': case 'd': arrows.push_back(Arrow::Down); break;
        default: throw ParseError(std::string("pipe codes use U and D, found '") + text[i] + "'", i);
      }
    }
    if (arrows.empty()) throw ParseError("empty pipe code", 0);
    return PipeCode(std::move(arrows));
  }

  int length() const { return static_cast<int>(arrows_.size()); }
  /// 1-based.
  Arrow at(int i) const { return arrows_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// The code read from position `shift + 1` onwards.
  PipeCode rotated(int shift) const {
    std::vector<Arrow> out(arrows_);
    std::rotate(out.begin(), out.begin() + (shift % length()), out.end());
    return PipeCode(std::move(out));
  }

  /// Every arrow exchanged.
  PipeCode flipped() const {
    std::vector<Arrow> out(arrows_);
    for (auto& a : out) a = a == Arrow::Up ? Arrow::Down : Arrow::Up;
    return PipeCode(std::move(out));
  }

  bool all_equal() const {
    return std::all_of(arrows_.begin(), arrows_.end(), [&](Arrow a) { return a == arrows_.front(); });
  }

  friend bool operator==(const PipeCode&, const PipeCode&) = default;

 private:
  std::vector<Arrow> arrows_;
};

inline std::string to_string(const PipeCode& s) {
  std::string out;
  for (auto a : s.arrows()) out += a == Arrow::Up ? 'U' : 'D';
  return out;
}

/// 1-based cyclic successor.
inline int cyclic_next(int i, int k) { return i % k + 1; }

/// One generator per copy of the half-plane piece: copy i has edge rays
/// Delta_i and Delta_{i+1}; the one lying on the bottom edge precedes the one
/// on the diagonal edge. Up puts Delta_i on the bottom, Down on the diagonal.
inline std::vector<std::pair<int, int>> pipe_generators(const PipeCode& s) {
  const int k = s.length();
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= k; ++i) {
    const int j = cyclic_next(i, k);
    gens.emplace_back(s.at(i) == Arrow::Up ? std::pair{i, j} : std::pair{j, i});
  }
  return gens;
}

/// Cofinality order on the edge rays: i precedes j when every map that is
/// unbounded along Delta_i is unbounded along Delta_j.
inline FinitePreorder pipe_preorder(const PipeCode& s) {
  return preorder_from_generators(s.length(), pipe_generators(s));
}

/// Number of homotopy classes of maps from the pipe to R.
inline std::uint64_t count_pipe_classes(const PipeCode& s) { return count_preorder_antichains(pipe_preorder(s)); }

/// The 2k codes reachable by rotation and/or a global flip, duplicates kept.
inline std::vector<PipeCode> equivalent_codes(const PipeCode& s) {
  std::vector<PipeCode> out;
  const PipeCode f = s.flipped();
  for (int r = 0; r < s.length(); ++r) {
    out.push_back(s.rotated(r));
    out.push_back(f.rotated(r));
  }
  return out;
}

inline bool code_equivalent(const PipeCode& a, const PipeCode& b) {
  if (a.length() != b.length()) return false;
  const auto orbit = equivalent_codes(a);
  return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

}  // namespace longray
