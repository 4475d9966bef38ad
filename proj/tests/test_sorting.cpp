#include <gtest/gtest.h>

#include <set>

#include "dcamb/sorting.hpp"
#include "oracles.hpp"

using namespace dcamb;
using oracle::word;

namespace {

Root r(std::vector<std::int64_t> c) { return Root(std::move(c)); }

// Linear Coxeter word t_1 ... t_{k-1} on the parabolic <s_n> of rank n = k.
CoxeterWord linear(int k) {
  Word letters;
  for (int i = 1; i < k; ++i) letters.push_back(i);
  return CoxeterWord(k, letters);
}

std::vector<Root> sorted_labels(const CoxeterWord& c, const AffinePermutation& v) {
  std::vector<Root> out;
  for (const auto& [letter, beta] : labels(c, v)) out.push_back(beta);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CoxeterWord, Validation) {
  EXPECT_THROW(CoxeterWord(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(CoxeterWord(3, {1, 2, 3}), std::invalid_argument);
  const CoxeterWord c(3, {4, 2});  // letters wrap modulo n
  EXPECT_EQ(c.letters(), (Word{1, 2}));
  EXPECT_EQ(c.reversed().letters(), (Word{2, 1}));
  EXPECT_EQ(c.index_set(), (IndexSet{1, 2}));
}

TEST(SortingWord, Examples) {
  const CoxeterWord c(3, {1, 2});
  const auto e = sorting_word(c, AffinePermutation::identity(3));
  EXPECT_TRUE(e.letters.empty());
  EXPECT_EQ(e.skips.at(1), 0u);
  EXPECT_EQ(e.skips.at(2), 0u);

  const auto w = sorting_word(c, word(3, {1, 2, 1}));
  EXPECT_EQ(w.letters, (Word{1, 2, 1}));
  ASSERT_EQ(w.blocks.size(), 2u);
  EXPECT_EQ(w.blocks[0], (Word{1, 2}));
  EXPECT_EQ(w.blocks[1], (Word{1}));

  const auto u = sorting_word(c, word(3, {2, 1}));
  EXPECT_EQ(u.letters, (Word{2, 1}));
  ASSERT_EQ(u.blocks.size(), 2u);
  EXPECT_EQ(u.blocks[0], (Word{2}));
  EXPECT_EQ(u.blocks[1], (Word{1}));
}

TEST(SortingWord, IsLeftmostReducedSubword) {
  for (int k : {3, 4}) {
    for (const auto& c : {linear(k), linear(k).reversed()}) {
      for (const auto& w : parabolic_elements(k, c.index_set())) {
        ASSERT_EQ(sorting_word(c, w).letters, oracle::leftmost_subword(c, w)) << w.to_string();
      }
    }
  }
  // A non-linear Coxeter element of A_3: t2 t1 t3.
  const CoxeterWord bip(4, {2, 1, 3});
  for (const auto& w : parabolic_elements(4, bip.index_set())) {
    ASSERT_EQ(sorting_word(bip, w).letters, oracle::leftmost_subword(bip, w));
  }
}

TEST(Sortable, Examples) {
  const CoxeterWord c(3, {1, 2});
  EXPECT_TRUE(is_sortable(c, word(3, {1, 2, 1})));
  EXPECT_FALSE(is_sortable(c, word(3, {2, 1})));
  for (const auto& cw : {CoxeterWord(3, {1, 2}), CoxeterWord(3, {2, 1}), CoxeterWord(4, {3, 1, 2})}) {
    EXPECT_TRUE(is_sortable(cw, AffinePermutation::identity(cw.rank())));
  }
}

TEST(Sortable, MatchesBlockDefinition) {
  // The subword scan is exponential in the length, so stay at A_3 and below.
  for (int k : {3, 4}) {
    for (const auto& c : {linear(k), linear(k).reversed()}) {
      for (const auto& w : parabolic_elements(k, c.index_set())) {
        ASSERT_EQ(is_sortable(c, w), oracle::sortable_by_definition(c, w)) << w.to_string();
      }
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_sortables(CoxeterWord(3, {1})).size(), 2u);
  const auto a2 = enumerate_sortables(CoxeterWord(3, {1, 2}));
  const std::set<AffinePermutation> expected{AffinePermutation::identity(3), word(3, {1}), word(3, {2}),
                                             word(3, {1, 2}), word(3, {1, 2, 1})};
  EXPECT_EQ(std::set<AffinePermutation>(a2.begin(), a2.end()), expected);
  EXPECT_EQ(enumerate_sortables(linear(4)).size(), 14u);
}

TEST(Enumerate, CatalanCounts) {
  for (int k = 3; k <= 7; ++k) {
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_sortables(linear(k)).size()), oracle::catalan(k)) << "S_" << k;
  }
  EXPECT_EQ(enumerate_sortables(CoxeterWord(5, {2, 4, 1, 3})).size(), 42u);
}

TEST(Label, Examples) {
  const CoxeterWord c(3, {1, 2});
  for (int rr : {1, 2}) EXPECT_EQ(label(c, AffinePermutation::identity(3), rr), Root::simple(3, rr));
  EXPECT_EQ(label(c, word(3, {1, 2}), 2), r({-1, -1, 0}));
  EXPECT_EQ(label(c, word(3, {1, 2}), 1), r({0, 1, 0}));
}

TEST(Label, NegativeLabelsAreCoverReflections) {
  for (int k : {3, 4, 5}) {
    const auto c = linear(k);
    for (const auto& v : enumerate_sortables(c)) {
      std::vector<Root> negatives;
      for (const auto& [letter, beta] : labels(c, v)) {
        ASSERT_NE(beta.sign(), 0);
        if (beta.is_negative()) negatives.push_back(-beta);
      }
      auto covers = cover_reflections(v);
      std::sort(negatives.begin(), negatives.end());
      std::sort(covers.begin(), covers.end());
      EXPECT_EQ(negatives, covers) << v.to_string();
    }
  }
}

TEST(Label, RestrictionCompatibility) {
  // Labels computed in a smaller parabolic agree with those in a larger one
  // for elements of the smaller parabolic.
  for (int k = 4; k <= 5; ++k) {
    const auto big = linear(k);
    Word small_letters(big.letters().begin(), big.letters().end() - 1);
    const CoxeterWord small(k, small_letters);
    for (const auto& v : enumerate_sortables(small)) {
      ASSERT_TRUE(is_sortable(big, v));
      for (int rr : small_letters) EXPECT_EQ(label(small, v, rr), label(big, v, rr));
    }
  }
}

TEST(PiDown, Examples) {
  const CoxeterWord c(3, {1, 2});
  for (const auto& v : enumerate_sortables(c)) EXPECT_EQ(pi_down(c, v), v);
  EXPECT_EQ(pi_down(c, word(3, {2, 1})), word(3, {2}));
  const CoxeterWord d(3, {2, 1});
  EXPECT_EQ(pi_down(d, word(3, {2, 1})), word(3, {2, 1}));
}

TEST(PiDown, MatchesScanOfSortablesBelow) {
  for (int k : {3, 4}) {
    const auto c = linear(k);
    const auto sortables = enumerate_sortables(c);
    for (const auto& w : parabolic_elements(k, c.index_set())) {
      const auto expected = oracle::max_below(sortables, w);
      ASSERT_TRUE(expected.has_value());
      EXPECT_EQ(pi_down(c, w), *expected) << w.to_string();
    }
  }
}

TEST(Antipode, Examples) {
  const CoxeterWord t1(3, {1});
  EXPECT_EQ(antipode_finite(t1, AffinePermutation::identity(3)), word(3, {1}));
  const CoxeterWord c(3, {1, 2});
  EXPECT_EQ(antipode_finite(c, word(3, {1})), word(3, {2, 1}));
  EXPECT_EQ(sorted_labels(c, word(3, {1})), (std::vector<Root>{r({-1, 0, 0}), r({1, 1, 0})}));
  auto neg = sorted_labels(c.reversed(), word(3, {2, 1}));
  for (auto& beta : neg) beta = -beta;
  std::sort(neg.begin(), neg.end());
  EXPECT_EQ(neg, sorted_labels(c, word(3, {1})));
  EXPECT_EQ(antipode_finite(c, longest_element(3, c.index_set())), AffinePermutation::identity(3));
}

TEST(Antipode, BijectionNegatingLabels) {
  for (int k = 3; k <= 6; ++k) {
    const auto c = linear(k);
    const auto sortables = enumerate_sortables(c);
    std::set<AffinePermutation> images;
    for (const auto& u : sortables) {
      const auto up = antipode_finite(c, u);
      ASSERT_TRUE(is_sortable(c.reversed(), up));
      images.insert(up);
      auto neg = sorted_labels(c.reversed(), up);
      for (auto& beta : neg) beta = -beta;
      std::sort(neg.begin(), neg.end());
      EXPECT_EQ(neg, sorted_labels(c, u)) << u.to_string();
    }
    EXPECT_EQ(images.size(), sortables.size());
  }
}

TEST(FirstBlockTail, Examples) {
  EXPECT_EQ(first_block_tail(linear(3), AffinePermutation::identity(3), ChainDirection::Ascending), 3);
  EXPECT_EQ(first_block_tail(linear(3), word(3, {2}), ChainDirection::Ascending), 2);
  EXPECT_EQ(first_block_tail(linear(4), word(4, {1, 3}), ChainDirection::Ascending), 3);
  EXPECT_EQ(first_block_tail(linear(4).reversed(), AffinePermutation::identity(4), ChainDirection::Descending), 0);
}

TEST(FirstBlockTail, ReversalShiftsTailByOne) {
  for (int k = 3; k <= 6; ++k) {
    const auto c = linear(k);
    for (const auto& u : enumerate_sortables(c)) {
      const int g = first_block_tail(c, u, ChainDirection::Ascending);
      const int gp = first_block_tail(c.reversed(), antipode_finite(c, u), ChainDirection::Descending);
      EXPECT_EQ(gp, g - 1) << "k=" << k << " u=" << u.to_string();
    }
  }
}
