#include <gtest/gtest.h>

#include <set>

#include "clusterkit/heap.hpp"
#include "clusterkit/patterns.hpp"
#include "oracles.hpp"

using namespace clusterkit;

namespace {

Heap heap(std::vector<int> letters, int rank) { return Heap::from_word(Word{std::move(letters), rank}); }

std::set<HeapPoint> points(const Heap& h) { return {h.points().begin(), h.points().end()}; }

}  // namespace

TEST(HeapFromWord, ExampleHeapShape) {
  const Heap h = heap({2, 3, 1, 2, 4}, 5);
  EXPECT_EQ(points(h), (std::set<HeapPoint>{{2, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}}));
  EXPECT_EQ(h.evaluate(), (Permutation{3, 4, 1, 5, 2}));
  // bottom s_2 lies below everything; the top s_2 covers s_1 and s_3
  const auto& col2 = h.column(2);
  ASSERT_EQ(col2.size(), 2u);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (i != col2[0]) EXPECT_TRUE(h.less(col2[0], i));
  EXPECT_TRUE(h.less(h.column(1)[0], col2[1]));
  EXPECT_TRUE(h.less(h.column(3)[0], h.column(4)[0]));
  EXPECT_FALSE(h.less(h.column(1)[0], h.column(4)[0]));
}

TEST(HeapFromWord, EmptyAndNonReduced) {
  EXPECT_TRUE(heap({}, 4).empty());
  EXPECT_THROW(heap({1, 2, 1, 2}, 3), not_reduced_error);
  EXPECT_THROW(heap({1, 1}, 3), not_reduced_error);
}

TEST(HeapFromWord, TheTwoBraidHeapsDiffer) {
  const Heap a = heap({1, 2, 1}, 3), b = heap({2, 1, 2}, 3);
  EXPECT_NE(a, b);
  EXPECT_EQ(a.evaluate(), b.evaluate());
  EXPECT_EQ(a.column(1).size(), 2u);
  EXPECT_EQ(b.column(2).size(), 2u);
}

TEST(HeapFromWord, CommutingLettersGiveTheSameHeap) {
  EXPECT_EQ(heap({1, 3, 2}, 4), heap({3, 1, 2}, 4));
  EXPECT_EQ(heap({2, 3, 1, 2, 4}, 5), heap({2, 1, 3, 4, 2}, 5));
}

// For every w in S_5 the distinct heaps of all reduced words are exactly
// the commutativity classes found by the braid search.
TEST(HeapFromWord, WellDefinedOnClasses) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      std::set<Heap> from_words;
      for (const auto& letters : oracle::reduced_words(w)) from_words.insert(heap(letters, n));
      const auto classes = commutativity_classes(heap_of(w));
      ASSERT_EQ(std::set<Heap>(classes.begin(), classes.end()), from_words) << to_string(w);
      ASSERT_EQ(static_cast<int>(from_words.size()), oracle::class_count(w));
      for (const auto& h : from_words) ASSERT_EQ(h.evaluate(), w);
    }
  }
}

TEST(CommutativityClasses, MaximallyClusteredInS6) {
  int checked = 0;
  for (const auto& w : oracle::all_permutations(6)) {
    if (!patterns::maximally_clustered().avoided_by(w) || w.length() > 9) continue;
    ASSERT_EQ(static_cast<int>(commutativity_classes(heap_of(w)).size()), oracle::class_count(w)) << to_string(w);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(CommutativityClasses, BudgetIsEnforced) {
  EXPECT_THROW(commutativity_classes(heap_of(Permutation{5, 4, 3, 2, 1}), 10), class_search_error);
}

TEST(FullyCommutative, Examples) {
  EXPECT_FALSE(is_fully_commutative(Permutation{3, 2, 1}));
  EXPECT_TRUE(is_fully_commutative(heap({2, 3, 1, 2, 4}, 5)));
  EXPECT_FALSE(has_lateral_convexity(heap({1, 2, 1}, 3)));
}

TEST(FullyCommutative, LateralConvexityMatches321Avoidance) {
  for (int n = 1; n <= 8; ++n) {
    int members = 0;
    for (const auto& w : oracle::all_permutations(n)) {
      const bool lc = has_lateral_convexity(heap_of(w));
      ASSERT_EQ(lc, !oracle::contains(w, Permutation{3, 2, 1})) << to_string(w);
      members += lc;
    }
    if (n == 7) EXPECT_EQ(members, 429);
  }
}

TEST(HeapContains, Examples) {
  const Permutation w = word_to_permutation(Word{{2, 3, 1, 2, 4}, 5});
  EXPECT_TRUE(heap_contains(w, word_to_permutation(Word{{1, 2, 3}, 4})));
  EXPECT_FALSE(heap_contains(w, Permutation{3, 2, 1}));
  EXPECT_TRUE(heap_contains(patterns::hexagon(), patterns::hexagon()));
}

TEST(HeapContains, UnsupportedHostIsReported) {
  EXPECT_THROW(heap_contains(Permutation{4, 3, 2, 1}, Permutation{2, 3, 1}), class_search_error);
  EXPECT_NO_THROW(heap_contains(Permutation{4, 3, 2, 1}, Permutation{2, 3, 1}, ClassSearch::exhaustive));
  EXPECT_THROW(HeapPattern(Permutation{2, 1, 4, 3}), std::invalid_argument);
}

// Convex subposets are consecutive factors of linear extensions.
TEST(HeapContains, MatchesReducedWordFactorOracle) {
  const std::vector<Permutation> hs{
      {2, 1},        {2, 3, 1},       {3, 1, 2},       {3, 2, 1},
      {2, 3, 4, 1},  {3, 4, 1, 2},    {2, 4, 1, 3},    {3, 1, 4, 2},
      {4, 2, 3, 1} /* not FC */};
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      if (w.length() > 10) continue;
      for (const auto& h : hs) {
        if (h.rank() > n) continue;
        ASSERT_EQ(heap_contains(w, h, ClassSearch::exhaustive), oracle::heap_contains(w, h))
            << to_string(w) << " vs " << to_string(h);
      }
    }
  }
}

TEST(HeapContains, HexagonMatchesOneLinePatternsUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      if (oracle::contains(w, Permutation{3, 2, 1})) continue;
      ASSERT_EQ(heap_contains(w, patterns::hexagon()), !patterns::hexagon_one_line().avoided_by(w)) << to_string(w);
    }
  }
}

TEST(HeapOutput, PictureAndPoints) {
  const Heap h = heap({2, 3, 1, 2, 4}, 5);
  EXPECT_EQ(heap_picture(h), ". * . *\n* . * .\n. * . .\n");
  EXPECT_EQ(heap_points_string(h), "(1,2) (2,1) (2,3) (3,2) (4,3)");
}

TEST(BraidNeighbours, OnlyForShortBraids) {
  EXPECT_TRUE(braid_neighbours(heap({2, 3, 1, 2, 4}, 5)).empty());
  const auto n = braid_neighbours(heap({1, 2, 1}, 3));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0], heap({2, 1, 2}, 3));
}
