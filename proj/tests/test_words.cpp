// Copyright 2026 The graev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "graev/error.hpp"
#include "graev/words.hpp"
#include "support.hpp"

namespace graev {
namespace {

using testing::neg;
using testing::pos;
using testing::rw;

PointSet ab() { return PointSet::standard(2); }

std::string reduced(const std::string& text) {
  auto points = ab();
  return format_word(reduce(parse_word(text, points)), points);
}

TEST(Reduce, CancelsAdjacentInverses) { EXPECT_EQ(reduced("a a^-1"), "e"); }
TEST(Reduce, DropsIdentity) { EXPECT_EQ(reduced("a e b"), "a b"); }
TEST(Reduce, CancelsInnerPair) { EXPECT_EQ(reduced("a b b^-1 a"), "a a"); }
TEST(Reduce, CascadesThroughNestedPairs) { EXPECT_EQ(reduced("a b e b^-1 a^-1 b"), "b"); }

TEST(Reduce, MatchesNaiveOracleOnAllShortWords) {
  for (std::size_t len = 0; len <= 6; ++len) {
    testing::for_each_word(testing::alphabet(2, true), len, [&](const std::vector<Letter>& w) {
      auto expected = testing::oracle_reduce(w);
      auto got = reduce(Word(w));
      ASSERT_EQ(std::vector<Letter>(got.letters().begin(), got.letters().end()), expected);
    });
  }
}

TEST(Reduce, IsIdempotent) {
  for (std::size_t len = 0; len <= 8; ++len) {
    testing::for_each_word(testing::alphabet(1, true), len, [&](const std::vector<Letter>& w) {
      auto once = reduce(Word(w));
      ASSERT_EQ(reduce(once.as_word()), once);
    });
  }
}

TEST(GroupOps, Examples) {
  EXPECT_EQ(multiply(rw({pos(0), pos(1)}), rw({neg(1), pos(0)})), rw({pos(0), pos(0)}));
  EXPECT_EQ(invert(rw({pos(0), neg(1)})), rw({pos(1), neg(0)}));
  auto g = rw({pos(0), neg(1)});
  EXPECT_EQ(multiply(ReducedWord{}, g), g);
  EXPECT_EQ(multiply(g, invert(g)), ReducedWord{});
}

TEST(GroupOps, AssociativeOnFP2) {
  auto words = enumerate_reduced_words(2, 2);
  for (const auto& g : words) {
    for (const auto& h : words) {
      for (const auto& k : words) {
        ASSERT_EQ(multiply(multiply(g, h), k), multiply(g, multiply(h, k)));
      }
    }
  }
}

TEST(GroupOps, ExponentSumIsAHomomorphism) {
  auto words = enumerate_reduced_words(2, 3);
  for (const auto& g : words) {
    for (const auto& h : words) {
      ASSERT_EQ(exponent_sum(multiply(g, h)), exponent_sum(g) + exponent_sum(h));
    }
  }
}

TEST(Measures, LengthSupportExponentSum) {
  auto points = ab();
  EXPECT_EQ(length(parse_word("a e b", points)), 3u);
  std::set<Letter> expected{pos(0), neg(0), pos(1), neg(1)};
  EXPECT_EQ(support(parse_word("a b^-1", points)), expected);
  EXPECT_EQ(support(parse_word("e e", points)), std::set<Letter>{});
  EXPECT_EQ(exponent_sum(parse_word("a b a^-1", points)), 1);
  EXPECT_EQ(exponent_sum(parse_word("e", points)), 0);
}

TEST(AlmostIrreducible, Examples) {
  auto points = ab();
  EXPECT_TRUE(is_almost_irreducible(parse_word("a e b", points)));
  EXPECT_FALSE(is_almost_irreducible(parse_word("a a^-1 b", points)));
  EXPECT_FALSE(is_almost_irreducible(parse_word("e e", points)));
  EXPECT_TRUE(is_almost_irreducible(Word{}));
}

TEST(AlmostIrreducible, WithoutIdentityMeansReduced) {
  for (std::size_t len = 0; len <= 6; ++len) {
    testing::for_each_word(testing::alphabet(2, true), len, [&](const std::vector<Letter>& w) {
      const bool has_e = std::any_of(w.begin(), w.end(), [](auto& l) { return l.is_identity(); });
      if (!has_e) ASSERT_EQ(is_almost_irreducible(Word(w)), reduce(Word(w)).length() == w.size());
    });
  }
}

TEST(EnumerateFPn, Examples) {
  EXPECT_EQ(enumerate_reduced_words(2, 1).size(), 5u);
  EXPECT_EQ(enumerate_reduced_words(2, 2).size(), 17u);
  auto one = enumerate_reduced_words(1, 3);
  ASSERT_EQ(one.size(), 7u);
  auto points = PointSet::standard(1);
  std::vector<std::string> names;
  for (auto& w : one) names.push_back(format_word(w, points));
  EXPECT_EQ(names, (std::vector<std::string>{"e", "a", "a^-1", "a a", "a^-1 a^-1", "a a a",
                                             "a^-1 a^-1 a^-1"}));
}

TEST(EnumerateFPn, MatchesReductionOracleAndCountFormula) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 0; n <= (k == 3 ? 3u : 4u); ++n) {
      auto words = enumerate_reduced_words(k, n);
      auto oracle = testing::oracle_fpn(k, n);
      ASSERT_EQ(words.size(), oracle.size()) << "k=" << k << " n=" << n;
      ASSERT_EQ(words.size(), count_reduced_words(k, n));
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        ASSERT_LE(w.length(), n);
        ASSERT_EQ(reduce(w.as_word()), w);
        ASSERT_TRUE(oracle.contains({w.letters().begin(), w.letters().end()}));
        if (i > 0) ASSERT_LT(words[i - 1], w);
      }
    }
  }
}

TEST(EnumerateFPn, CapIsEnforced) {
  EXPECT_THROW(enumerate_reduced_words(3, 12), Error);
  try {
    enumerate_reduced_words(2, 5, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(Parse, SyntaxAndErrors) {
  auto points = ab();
  EXPECT_TRUE(parse_word("", points).empty());
  EXPECT_EQ(parse_word("  a   b^-1 ", points).size(), 2u);
  EXPECT_EQ(format_word(parse_word("a e b^-1", points), points), "a e b^-1");
  try {
    parse_word("a z", points);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownPoint);
  }
  EXPECT_THROW(parse_word("a^2", points), Error);
  EXPECT_THROW(parse_word("a^-1^-1", points), Error);
  EXPECT_TRUE(parse_reduced_word("a a^-1", points).is_identity());
  PointSet fresh;
  parse_word("x y^-1 x", fresh, true);
  EXPECT_EQ(fresh.names(), (std::vector<std::string>{"x", "y"}));
}

TEST(ReducedWord, RejectsUnreducedOrIdentityLetters) {
  EXPECT_THROW(ReducedWord::from_letters({pos(0), neg(0)}), Error);
  EXPECT_THROW(ReducedWord::from_letters({Letter::identity()}), Error);
}

TEST(PointSetNames, StandardSkipsTheIdentityName) {
  auto names = PointSet::standard(6).names();
  EXPECT_EQ(names, (std::vector<std::string>{"a", "b", "c", "d", "f", "g"}));
  EXPECT_THROW(PointSet(std::vector<std::string>{"e"}), Error);
  EXPECT_THROW(PointSet(std::vector<std::string>{"a", "a"}), Error);
}

}  // namespace
}  // namespace graev
