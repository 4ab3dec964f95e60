#include <gtest/gtest.h>

#include <random>

#include "longray/long_line.hpp"
#include "longray/pipe.hpp"
#include "support.hpp"

using namespace longray;

namespace {

PipeCode P(const char* s) { return PipeCode::parse(s); }

std::vector<PipeCode> all_codes(int k) {
  std::vector<PipeCode> out;
  for (std::uint32_t bits = 0; bits < (1U << k); ++bits) {
    std::vector<Arrow> arrows;
    for (int i = 0; i < k; ++i) arrows.push_back(((bits >> i) & 1U) ? Arrow::Down : Arrow::Up);
    out.emplace_back(std::move(arrows));
  }
  return out;
}

}  // namespace

TEST(PipeCode, ParseAndPrint) {
  EXPECT_EQ(to_string(P("uUd")), "UUD");
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("UXD"), ParseError);
  EXPECT_EQ(to_string(P("UUD").rotated(2)), "DUU");
  EXPECT_EQ(to_string(P("UUD").flipped()), "DDU");
}

TEST(PipePreorder, AllUpIsTotal) {
  const auto p = pipe_preorder(P("UUU"));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(p.has_loop(i));
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(p.precedes(i, j));
  }
  EXPECT_EQ(count_pipe_classes(P("UUU")), 4U);
}

TEST(PipePreorder, UpUpDown) {
  const auto gens = pipe_generators(P("UUD"));
  EXPECT_EQ(gens, (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}}));
  const auto p = pipe_preorder(P("UUD"));
  EXPECT_EQ(p.pairs(), (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(count_pipe_classes(P("UUD")), 4U);
}

TEST(PipePreorder, AlternatingFence) {
  const auto p = pipe_preorder(P("UDUDUDUD"));
  for (int odd = 1; odd <= 7; odd += 2) {
    const int before = odd == 1 ? 8 : odd - 1;
    const int after = odd + 1;
    EXPECT_TRUE(p.precedes(odd, before));
    EXPECT_TRUE(p.precedes(odd, after));
    for (int j = 1; j <= 8; ++j) {
      EXPECT_FALSE(p.precedes(j, odd));
      if (j != before && j != after) {
        EXPECT_FALSE(p.precedes(odd, j));
      }
    }
  }
  EXPECT_EQ(p.pairs().size(), 8U);
  EXPECT_EQ(count_pipe_classes(P("UDUDUDUD")), 47U);
  EXPECT_EQ(count_pipe_classes(P("UDUDUDUD")), count_classes_Ln_to_R(2));
}

TEST(PipePreorder, SingleCopy) {
  const auto p = pipe_preorder(P("U"));
  EXPECT_TRUE(p.has_loop(1));
  EXPECT_EQ(count_pipe_classes(P("U")), 2U);
  EXPECT_EQ(count_pipe_classes(P("D")), 2U);
}

TEST(PipePreorder, TwoCopiesShareBothEdges) {
  // Both pieces put Delta_1 on the bottom edge and Delta_2 on the diagonal.
  const auto p = pipe_preorder(P("UD"));
  EXPECT_EQ(p.pairs(), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(count_pipe_classes(P("UD")), 3U);
}

TEST(PipePreorder, GeneratorCountAndLoops) {
  for (int k = 1; k <= 8; ++k) {
    for (const auto& code : all_codes(k)) {
      EXPECT_EQ(pipe_generators(code).size(), static_cast<std::size_t>(k));
      const auto p = pipe_preorder(code);
      EXPECT_EQ(transitive_closure(p), p);
      for (int i = 1; i <= k; ++i) EXPECT_EQ(p.has_loop(i), code.all_equal()) << to_string(code);
    }
  }
}

TEST(PipeClasses, AgreeWithBruteForce) {
  for (int k = 1; k <= 10; ++k) {
    for (const auto& code : all_codes(k)) {
      const auto p = pipe_preorder(code);
      const auto brute = test_support::brute_force_antichains(k, [&](int a, int b) { return p.comparable(a + 1, b + 1); });
      ASSERT_EQ(count_pipe_classes(code), brute) << to_string(code);
    }
  }
}

TEST(PipeClasses, AllEqualCodesAndSingletons) {
  for (int k = 1; k <= 24; ++k) {
    EXPECT_EQ(count_pipe_classes(PipeCode(std::vector<Arrow>(k, Arrow::Up))), static_cast<std::uint64_t>(k) + 1);
    EXPECT_EQ(count_pipe_classes(PipeCode(std::vector<Arrow>(k, Arrow::Down))), static_cast<std::uint64_t>(k) + 1);
  }
  for (const auto& code : all_codes(6)) {
    std::uint64_t singletons = 0;
    for_each_preorder_antichain(pipe_preorder(code), [&](std::span<const int> a) { singletons += a.size() == 1; });
    EXPECT_EQ(singletons, 6U);
  }
}

TEST(CodeEquivalent, Examples) {
  EXPECT_TRUE(code_equivalent(P("DUU"), P("UUD")));
  EXPECT_TRUE(code_equivalent(P("UUU"), P("DDD")));
  EXPECT_FALSE(code_equivalent(P("UUU"), P("UUD")));
  EXPECT_FALSE(code_equivalent(P("UU"), P("UUU")));
  EXPECT_TRUE(code_equivalent(P("UDUUD"), P("DDUDU")));  // flip of a rotation
}

TEST(CodeEquivalent, IsAnEquivalenceRelation) {
  for (int k = 1; k <= 6; ++k) {
    const auto codes = all_codes(k);
    for (const auto& a : codes) {
      EXPECT_TRUE(code_equivalent(a, a));
      for (const auto& b : codes) {
        EXPECT_EQ(code_equivalent(a, b), code_equivalent(b, a));
      }
    }
  }
}

// Rotation relabels the edge rays cyclically, so it preserves the order up
// to isomorphism. A flip reverses every generator and yields the dual order,
// which has the same antichains.
TEST(CodeEquivalent, RotationGivesIsomorphicOrderAndFlipGivesDual) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 10)(rng);
    std::vector<Arrow> arrows;
    for (int i = 0; i < k; ++i) arrows.push_back(std::bernoulli_distribution(0.5)(rng) ? Arrow::Up : Arrow::Down);
    const PipeCode code(arrows);
    const auto p = pipe_preorder(code);
    for (const auto& other : equivalent_codes(code)) {
      EXPECT_EQ(count_pipe_classes(other), count_pipe_classes(code));
    }
    for (int r = 0; r < k; ++r) EXPECT_TRUE(isomorphic(p, pipe_preorder(code.rotated(r))));
    const auto flipped = pipe_preorder(code.flipped());
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) ASSERT_EQ(flipped.precedes(i, j), p.precedes(j, i));
    }
  }
}

TEST(CodeEquivalent, ChiralCodeHasNonIsomorphicFlip) {
  // UUDUDD is not a rotation of its flip and its order is not self-dual.
  const auto code = P("UUDUDD");
  EXPECT_TRUE(code_equivalent(code, code.flipped()));
  EXPECT_FALSE(isomorphic(pipe_preorder(code), pipe_preorder(code.flipped())));
  EXPECT_EQ(count_pipe_classes(code), count_pipe_classes(code.flipped()));
}
