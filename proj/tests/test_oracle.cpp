#include <gtest/gtest.h>

#include "test_support.hpp"

namespace weylm {
namespace {

using testing::make;

TEST(EnumerateGroup, Orders) {
  EXPECT_EQ(oracle::enumerate_group(make("A1")).size(), 2u);
  EXPECT_EQ(oracle::enumerate_group(make("A2")).size(), 6u);
  EXPECT_EQ(oracle::enumerate_group(make("B3")).size(), 48u);
  EXPECT_EQ(oracle::enumerate_group(make("F4")).size(), 1152u);
}

TEST(EnumerateGroup, WordsAndDepths) {
  const RootSystem rs = make("C3");
  const auto g = oracle::enumerate_group(rs);
  for (std::size_t k = 0; k < g.size(); ++k) {
    EXPECT_EQ(static_cast<int>(g.words[k].size()), g.depth[k]);
    EXPECT_EQ(oracle::detail::product_of(rs, g.words[k]), g.elements[k]);
    EXPECT_EQ(multiply(rs, g.elements[k], oracle::detail::inverse_by_word(rs, g.words[k])), identity(rs));
    if (k > 0) EXPECT_LE(g.depth[k - 1], g.depth[k]);
  }
  EXPECT_EQ(g.depth.back(), 9);
}

TEST(EnumerateGroup, LimitsEnforced) {
  oracle::OracleLimits limits;
  limits.max_elements = 100;
  EXPECT_THROW(oracle::enumerate_group(make("B4"), limits), EnumerationCapExceeded);
  EXPECT_THROW(oracle::bruhat_oracle(make("E6")), EnumerationCapExceeded);
  EXPECT_THROW(oracle::classes_oracle(make("E7")), EnumerationCapExceeded);
}

TEST(BruhatOracle, A1) {
  const RootSystem rs = make("A1");
  const auto rel = oracle::bruhat_oracle(rs);
  const auto e = identity(rs);
  const auto s = simple_reflection(rs, 0);
  EXPECT_TRUE(rel.leq(e, s));
  EXPECT_FALSE(rel.leq(s, e));
  EXPECT_TRUE(rel.leq(e, e));
  EXPECT_TRUE(rel.leq(s, s));
}

TEST(BruhatOracle, A2LongestAboveAll) {
  const RootSystem rs = make("A2");
  const auto rel = oracle::bruhat_oracle(rs);
  const auto w0 = longest_element(rs);
  int relations = 0;
  for (const auto& u : rel.group().elements) {
    EXPECT_TRUE(rel.leq(u, w0));
    for (const auto& v : rel.group().elements) relations += rel.leq(u, v) ? 1 : 0;
  }
  // 6 reflexive, e below 5, each length-1 element below 3, each length-2 element below 1.
  EXPECT_EQ(relations, 6 + 5 + 2 * 3 + 2 * 1);
}

TEST(BruhatOracle, B2RotationsIncomparable) {
  const RootSystem rs = make("B2");
  const auto rel = oracle::bruhat_oracle(rs);
  const auto a = from_word(rs, {0, 1});
  const auto b = from_word(rs, {1, 0});
  EXPECT_FALSE(rel.leq(a, b));
  EXPECT_FALSE(rel.leq(b, a));
  EXPECT_EQ(rel.group().size(), 8u);
}

TEST(BruhatOracle, IsPartialOrder) {
  const RootSystem rs = make("B3");
  const auto rel = oracle::bruhat_oracle(rs);
  const std::size_t n = rel.group().size();
  for (std::size_t a = 0; a < n; ++a) {
    EXPECT_TRUE(rel.leq(a, a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel.leq(a, b)) EXPECT_FALSE(rel.leq(b, a));
      if (!rel.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel.leq(b, c)) EXPECT_TRUE(rel.leq(a, c));
      }
    }
  }
}

TEST(ClassesOracle, Examples) {
  const auto a1 = oracle::classes_oracle(make("A1"));
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].size() + a1[1].size(), 2u);
  std::vector<std::size_t> sizes;
  for (const auto& c : oracle::classes_oracle(make("A2"))) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(oracle::classes_oracle(make("G2")).size(), 6u);
}

TEST(Differential, AgreesOnSmallTypes) {
  for (auto name : testing::types_rank_le_3()) {
    const auto report = oracle_differential_check(make(name));
    EXPECT_TRUE(report.passed()) << name;
    EXPECT_EQ(report.suite, "oracle");
  }
}

TEST(Differential, AgreesOnF4) {
  EXPECT_TRUE(oracle_differential_check(make("F4")).passed());
}

}  // namespace
}  // namespace weylm
