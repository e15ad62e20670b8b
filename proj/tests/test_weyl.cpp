#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace weylm {
namespace {

using testing::make;

WeylElement word(const RootSystem& rs, std::initializer_list<int> one_based) {
  Word w;
  for (int i : one_based) w.push_back(i - 1);
  return from_word(rs, w);
}

TEST(Multiply, IdentityAndInvolution) {
  const RootSystem rs = make("A2");
  const auto e = identity(rs);
  const auto s1 = simple_reflection(rs, 0);
  const auto w = word(rs, {1, 2});
  EXPECT_EQ(multiply(rs, e, w), w);
  EXPECT_EQ(multiply(rs, w, e), w);
  EXPECT_EQ(multiply(rs, s1, s1), e);
}

TEST(Multiply, DihedralRelationInA2) {
  const RootSystem rs = make("A2");
  const auto s1s2 = multiply(rs, simple_reflection(rs, 0), simple_reflection(rs, 1));
  EXPECT_EQ(length(rs, s1s2), 2);
  EXPECT_EQ(multiply(rs, s1s2, multiply(rs, s1s2, s1s2)), identity(rs));
  EXPECT_NE(multiply(rs, s1s2, s1s2), identity(rs));
}

TEST(Multiply, CoxeterRelationsAllTypes) {
  for (auto name : {"B3", "C3", "D4", "F4", "G2", "E6"}) {
    const RootSystem rs = make(name);
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) {
        const int a = rs.cartan()[i][j] * rs.cartan()[j][i];
        const int m = i == j ? 1 : a == 0 ? 2 : a == 1 ? 3 : a == 2 ? 4 : 6;
        const auto st = multiply(rs, simple_reflection(rs, i), simple_reflection(rs, j));
        WeylElement p = identity(rs);
        for (int k = 0; k < m; ++k) {
          if (k > 0) EXPECT_NE(p, identity(rs));
          p = multiply(rs, p, st);
        }
        EXPECT_EQ(p, identity(rs)) << name << " " << i << "," << j;
      }
    }
  }
}

TEST(Multiply, RejectsMismatchedSystems) {
  const RootSystem a3 = make("A3");
  const RootSystem b3 = make("B3");
  EXPECT_THROW(multiply(a3, identity(a3), identity(b3)), RootSystemMismatch);
  EXPECT_THROW(length(a3, identity(b3)), RootSystemMismatch);
}

TEST(Length, Examples) {
  const RootSystem rs = make("A2");
  EXPECT_EQ(length(rs, identity(rs)), 0);
  EXPECT_EQ(length(rs, longest_element(rs)), 3);
  EXPECT_EQ(word(rs, {1, 2, 1}), longest_element(rs));
  EXPECT_EQ(length(rs, word(rs, {1, 2, 1})), 3);
}

TEST(ReducedWord, Examples) {
  EXPECT_TRUE(reduced_word(make("A2"), identity(make("A2"))).empty());
  const RootSystem a2 = make("A2");
  EXPECT_EQ(reduced_word(a2, longest_element(a2)), (Word{0, 1, 0}));
  const RootSystem b2 = make("B2");
  EXPECT_EQ(reduced_word(b2, longest_element(b2)), (Word{0, 1, 0, 1}));
  EXPECT_EQ(format_word(reduced_word(b2, longest_element(b2))), "1 2 1 2");
  EXPECT_EQ(format_word({}), "e");
}

TEST(ReducedWord, IsLexicographicallyFirst) {
  // s2 s1 s2 = s1 s2 s1 in A2; the canonical word starts with the smaller index.
  const RootSystem rs = make("A2");
  EXPECT_EQ(reduced_word(rs, word(rs, {2, 1, 2})), (Word{0, 1, 0}));
  const RootSystem a3 = make("A3");
  EXPECT_EQ(reduced_word(a3, word(a3, {3, 1})), (Word{0, 2}));
}

TEST(ReducedWord, RoundTripExhaustiveRankUpTo4) {
  for (auto name : testing::types_rank_le_4()) {
    const RootSystem rs = make(name);
    const WeylElement w0 = longest_element(rs);
    const int n = rs.num_positive();
    for (const auto& w : enumerate_elements(rs)) {
      const Word rw = reduced_word(rs, w);
      ASSERT_EQ(from_word(rs, rw), w) << name;
      ASSERT_EQ(static_cast<int>(rw.size()), length(rs, w));
      ASSERT_EQ(length(rs, multiply(rs, w0, w)), n - length(rs, w));
    }
  }
}

TEST(ReducedWord, RoundTripSampledRank5And6) {
  std::mt19937_64 rng(20261015);
  for (auto name : testing::types_rank_5_6()) {
    const RootSystem rs = make(name);
    const auto group = enumerate_elements(rs);
    for (int k = 0; k < 10000 / static_cast<int>(testing::types_rank_5_6().size()) + 1; ++k) {
      const auto& w = testing::pick(group, rng);
      const Word rw = reduced_word(rs, w);
      ASSERT_EQ(from_word(rs, rw), w);
      ASSERT_EQ(static_cast<int>(rw.size()), length(rs, w));
    }
  }
}

TEST(Length, SubadditiveWithParity) {
  std::mt19937_64 rng(7);
  for (auto name : {"B4", "D5", "E6", "F4"}) {
    const RootSystem rs = make(name);
    const auto group = enumerate_elements(rs);
    for (int k = 0; k < 2000; ++k) {
      const auto& u = testing::pick(group, rng);
      const auto& v = testing::pick(group, rng);
      const int luv = length(rs, multiply(rs, u, v));
      const int sum = length(rs, u) + length(rs, v);
      EXPECT_LE(luv, sum);
      EXPECT_EQ((sum - luv) % 2, 0);
    }
  }
}

TEST(Inverse, IsTwoSided) {
  std::mt19937_64 rng(11);
  const RootSystem rs = make("E6");
  const auto group = enumerate_elements(rs);
  for (int k = 0; k < 500; ++k) {
    const auto& w = testing::pick(group, rng);
    const auto wi = inverse(rs, w);
    EXPECT_EQ(multiply(rs, w, wi), identity(rs));
    EXPECT_EQ(multiply(rs, wi, w), identity(rs));
    EXPECT_EQ(length(rs, wi), length(rs, w));
  }
}

TEST(LongestElement, ParabolicExamples) {
  const RootSystem rs = make("A3");
  EXPECT_EQ(parabolic_longest(rs, SimpleSubset{}), identity(rs));
  EXPECT_EQ(parabolic_longest(rs, SimpleSubset::full(3)), longest_element(rs));
  EXPECT_EQ(parabolic_longest(rs, SimpleSubset::of({0})), simple_reflection(rs, 0));
  EXPECT_EQ(parabolic_longest(rs, SimpleSubset::of({0, 2})), word(rs, {1, 3}));
  EXPECT_EQ(length(rs, parabolic_longest(rs, SimpleSubset::of({0, 1}))), 3);
}

TEST(LongestElement, PropertiesAllTypes) {
  for (auto name : {"A5", "B4", "C5", "D6", "E6", "E7", "F4", "G2"}) {
    const RootSystem rs = make(name);
    const auto w0 = longest_element(rs);
    EXPECT_EQ(length(rs, w0), rs.num_positive());
    EXPECT_TRUE(is_involution(rs, w0));
    // w_sigma has length |Phi_sigma^+| and sends every positive root outside Phi_sigma to a positive root.
    for (std::uint32_t mask = 0; mask < (1u << rs.rank()); mask += 3) {
      const SimpleSubset sigma(mask);
      const auto ws = parabolic_longest(rs, sigma);
      int in_sub = 0;
      for (int r = 0; r < rs.num_positive(); ++r) {
        bool inside = true;
        for (int k = 0; k < rs.rank(); ++k) inside = inside && (rs.coords(r)[k] == 0 || sigma.contains(k));
        if (inside) {
          ++in_sub;
          EXPECT_FALSE(rs.is_positive(apply(rs, ws, r)));
        } else {
          EXPECT_TRUE(rs.is_positive(apply(rs, ws, r)));
        }
      }
      EXPECT_EQ(length(rs, ws), in_sub);
    }
  }
}

TEST(Support, Examples) {
  const RootSystem a3 = make("A3");
  EXPECT_TRUE(support(a3, identity(a3)).empty());
  EXPECT_EQ(support(a3, word(a3, {1, 2})), SimpleSubset::of({0, 1}));
  for (auto name : {"A1", "B3", "D4", "E6", "G2"}) {
    const RootSystem rs = make(name);
    EXPECT_EQ(support(rs, longest_element(rs)), SimpleSubset::full(rs.rank()));
  }
}

TEST(RankOneMinus, Examples) {
  const RootSystem b2 = make("B2");
  EXPECT_EQ(rank_one_minus(b2, identity(b2)), 0);
  EXPECT_EQ(fixed_space_dim(b2, identity(b2)), 2);
  EXPECT_EQ(rank_one_minus(b2, longest_element(b2)), 2);
  for (auto name : {"A3", "B3", "G2", "E6"}) {
    const RootSystem rs = make(name);
    for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(rank_one_minus(rs, simple_reflection(rs, i)), 1);
  }
}

TEST(RankOneMinus, RankNullityAndCoxeterElement) {
  for (auto name : testing::types_rank_le_4()) {
    const RootSystem rs = make(name);
    for (const auto& w : enumerate_elements(rs)) {
      ASSERT_EQ(rank_one_minus(rs, w) + fixed_space_dim(rs, w), rs.rank());
    }
    // A Coxeter element has no fixed vector.
    Word cox;
    for (int i = 0; i < rs.rank(); ++i) cox.push_back(i);
    EXPECT_EQ(fixed_space_dim(rs, from_word(rs, cox)), 0) << name;
  }
}

TEST(Involution, FlagsAndDiagramAutomorphism) {
  const RootSystem a2 = make("A2");
  EXPECT_TRUE(is_involution(a2, identity(a2)));
  EXPECT_TRUE(is_involution(a2, simple_reflection(a2, 0)));
  EXPECT_FALSE(is_involution(a2, word(a2, {1, 2})));
  EXPECT_EQ(minus_w0_on_simples(make("B2")), (std::vector<int>{0, 1}));
  EXPECT_EQ(minus_w0_on_simples(a2), (std::vector<int>{1, 0}));
  EXPECT_EQ(minus_w0_on_simples(make("A4")), (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(minus_w0_on_simples(make("D4")), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(minus_w0_on_simples(make("D5")), (std::vector<int>{0, 1, 2, 4, 3}));
  EXPECT_EQ(minus_w0_on_simples(make("E6")), (std::vector<int>{5, 1, 4, 3, 2, 0}));
  EXPECT_EQ(minus_w0_on_simples(make("E7")), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
}

detail::IntMatrix one_minus(const RootSystem& rs, const WeylElement& w) {
  auto m = matrix_of(rs, w);
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) m[i][j] = (i == j ? 1 : 0) - m[i][j];
  }
  return m;
}

// For commuting involutions x, y: rk(1-xy) = rk(1-x) + rk(1-y) iff E_-1(x) and E_-1(y) meet
// only in 0. For an involution E_-1(x) is the column space of 1-x, so the intersection is
// trivial iff the stacked column spaces have full combined rank.
TEST(RankOneMinus, CommutingInvolutionsEigenspaceCriterion) {
  for (auto name : testing::types_rank_le_3()) {
    const RootSystem rs = make(name);
    std::vector<WeylElement> invs;
    for (const auto& w : enumerate_elements(rs)) {
      if (is_involution(rs, w)) invs.push_back(w);
    }
    int trivial_pairs = 0;
    for (const auto& x : invs) {
      for (const auto& y : invs) {
        const auto xy = multiply(rs, x, y);
        if (xy != multiply(rs, y, x)) continue;
        const auto mx = one_minus(rs, x);
        const auto my = one_minus(rs, y);
        detail::IntMatrix both = mx;
        for (int i = 0; i < rs.rank(); ++i) both[i].insert(both[i].end(), my[i].begin(), my[i].end());
        const int rx = rank_one_minus(rs, x);
        const int ry = rank_one_minus(rs, y);
        const bool trivial = detail::exact_rank(both) == rx + ry;
        EXPECT_EQ(trivial, rank_one_minus(rs, xy) == rx + ry) << name;
        trivial_pairs += trivial ? 1 : 0;
      }
    }
    EXPECT_GT(trivial_pairs, 0);
  }
}

TEST(ExactRank, SmallMatrices) {
  EXPECT_EQ(detail::exact_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(detail::exact_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(detail::exact_rank({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}}), 2);
  EXPECT_EQ(detail::exact_rank({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 3);
  EXPECT_EQ(detail::exact_rank({{0, 0, 1}, {0, 0, 2}, {0, 1, 0}}), 2);
}

TEST(Words, ParseAndFormat) {
  EXPECT_EQ(parse_word("1 2 1", 2), (Word{0, 1, 0}));
  EXPECT_EQ(parse_word("e", 3), Word{});
  EXPECT_EQ(parse_word("   ", 3), Word{});
  try {
    parse_word("1 x 2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "x");
  }
  EXPECT_THROW(parse_word("3", 2), ParseError);
  EXPECT_THROW(parse_word("0", 2), ParseError);
}

}  // namespace
}  // namespace weylm
