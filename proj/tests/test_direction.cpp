#include <gtest/gtest.h>

#include <random>
#include <set>

#include "longray/direction.hpp"
#include "longray/parser.hpp"
#include "support.hpp"

using namespace longray;

namespace {

SubsetMask S(std::initializer_list<int> i) { return SubsetMask::of(i); }

}  // namespace

TEST(DirectionMatrix, Identity) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(direction_matrix(identity_vector(n), n), DirectionMatrix::identity(n));
  }
}

TEST(DirectionMatrix, Swap) {
  const auto d = direction_matrix(parse_vector_term("x2;x1", 2), 2);
  EXPECT_EQ(d.target(S({1})), S({2}));
  EXPECT_EQ(d.target(S({2})), S({1}));
  EXPECT_EQ(d.target(S({1, 2})), S({1, 2}));
  EXPECT_TRUE(d.rows_unique());
}

TEST(DirectionMatrix, MinAndProjection) {
  const auto d = direction_matrix(parse_vector_term("min(x1,x2);x1", 2), 2);
  EXPECT_EQ(d.target(S({1})), S({2}));
  EXPECT_EQ(d.target(S({2})), std::nullopt);
  EXPECT_EQ(d.target(S({1, 2})), S({1, 2}));
}

TEST(DirectionMatrix, Errors) {
  EXPECT_THROW(direction_matrix(parse_vector_term("x1;x2", 2), 3), InvalidInput);
  VectorTerm signed_map{{MapTerm::pos_part(1)}};
  EXPECT_THROW(direction_matrix(signed_map, 1), InvalidInput);
  EXPECT_THROW(direction_matrix(identity_vector(9), 9), InvalidInput);
}

TEST(BoolMatMul, Examples) {
  const auto swap = direction_matrix(parse_vector_term("x2;x1", 2), 2);
  const auto f = direction_matrix(parse_vector_term("min(x1,x2);x1", 2), 2);
  EXPECT_EQ(bool_mat_mul(f, DirectionMatrix::identity(2)), f);
  EXPECT_EQ(bool_mat_mul(DirectionMatrix::identity(2), f), f);
  EXPECT_EQ(bool_mat_mul(swap, swap), DirectionMatrix::identity(2));

  const auto product = bool_mat_mul(swap, f);
  EXPECT_EQ(product.target(S({1})), std::nullopt);
  EXPECT_EQ(product.target(S({2})), S({2}));
  EXPECT_EQ(product.target(S({1, 2})), S({1, 2}));
  EXPECT_EQ(product, direction_matrix(compose(parse_vector_term("min(x1,x2);x1", 2), parse_vector_term("x2;x1", 2)), 2));
  EXPECT_THROW(bool_mat_mul(f, DirectionMatrix::identity(3)), InvalidInput);
}

TEST(BoolMatMul, AssociativeOnCanonicalTuples) {
  const auto tuples = test_support::canonical_tuples(2);
  std::vector<DirectionMatrix> ds;
  for (const auto& t : tuples) ds.push_back(direction_matrix(t, 2));
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      for (const auto& c : ds) ASSERT_EQ(bool_mat_mul(bool_mat_mul(a, b), c), bool_mat_mul(a, bool_mat_mul(b, c)));
    }
  }
}

TEST(MonoidLaw, IdentityAndRandomTerms) {
  EXPECT_TRUE(verify_monoid_law(identity_vector(3), identity_vector(3), 3));
  for (int n = 1; n <= 4; ++n) {
    test_support::TermGenerator gen(n, 3, 70 + n);
    for (int trial = 0; trial < 200; ++trial) {
      VectorTerm f, g;
      for (int k = 0; k < n; ++k) {
        f.components.push_back(gen());
        g.components.push_back(gen());
      }
      ASSERT_TRUE(verify_monoid_law(f, g, n)) << print_vector_term(f) << " / " << print_vector_term(g);
      ASSERT_TRUE(direction_matrix(f, n).rows_unique());
    }
  }
}

TEST(DirectionMatrix, EqualMatricesIffComponentwiseClasses) {
  const auto tuples = test_support::canonical_tuples(2);
  ASSERT_EQ(tuples.size(), 25U);
  for (const auto& f : tuples) {
    for (const auto& g : tuples) {
      bool componentwise = true;
      for (int k = 0; k < 2; ++k) {
        componentwise = componentwise && cofinality_class(f.components[k], 2) == cofinality_class(g.components[k], 2);
      }
      EXPECT_EQ(homotopic_self_maps(f, g, 2), componentwise);
    }
  }
}

TEST(DirectionMatrix, CanonicalMatricesClosedUnderProduct) {
  for (int n = 1; n <= 2; ++n) {
    std::vector<DirectionMatrix> ds;
    for (const auto& t : test_support::canonical_tuples(n)) ds.push_back(direction_matrix(t, n));
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        const auto p = bool_mat_mul(a, b);
        EXPECT_NE(std::find(ds.begin(), ds.end(), p), ds.end());
      }
    }
  }
}
