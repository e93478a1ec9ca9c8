#include "implcount/counting.hpp"

#include <gtest/gtest.h>

#include "implcount/errors.hpp"
#include "oracles.hpp"

namespace implcount {
namespace {

using TV = TruthValue;

TEST(BruteCountsTest, KleeneExamples) {
  const auto c1 = brute_counts(1, Semantics::Kleene3);
  EXPECT_EQ(c1.t, 1);
  EXPECT_EQ(c1.f, 1);
  EXPECT_EQ(c1.u, 1);
  EXPECT_EQ(c1.g, 3);

  const auto c2 = brute_counts(2, Semantics::Kleene3);
  EXPECT_EQ(c2.t, 5);
  EXPECT_EQ(c2.f, 1);
  EXPECT_EQ(c2.u, 3);
  EXPECT_EQ(c2.g, 9);

  const auto c3 = brute_counts(3, Semantics::Kleene3);
  EXPECT_EQ(c3.t, 30);
  EXPECT_EQ(c3.f, 6);
  EXPECT_EQ(c3.u, 18);
  EXPECT_EQ(c3.g, 54);
}

TEST(BruteCountsTest, ClassicalExamples) {
  const auto c2 = brute_counts(2, Semantics::Classical2);
  EXPECT_EQ(c2.r(), 3);
  EXPECT_EQ(c2.s(), 1);
  EXPECT_EQ(c2.u, 0);
  EXPECT_EQ(c2.g, 4);
  EXPECT_EQ(brute_counts(4, Semantics::Classical2).g, 80);
}

TEST(BruteCountsTest, TotalsAreRadixPowerTimesCatalan) {
  for (const auto sem : {Semantics::Classical2, Semantics::Kleene3}) {
    for (int n = 1; n <= 7; ++n) {
      EXPECT_TRUE(brute_counts(n, sem).consistent()) << n;
    }
  }
}

TEST(BruteCountsTest, MatchesEvaluateOracle) {
  for (const auto sem : {Semantics::Classical2, Semantics::Kleene3}) {
    for (int n = 1; n <= 6; ++n) {
      const auto raw = oracle::tally_by_evaluate(n, sem, radix(sem));
      const auto c = brute_counts(n, sem);
      EXPECT_EQ(c.f, mpz_class(static_cast<unsigned long>(raw[0])));
      EXPECT_EQ(c.t, mpz_class(static_cast<unsigned long>(raw[1])));
      EXPECT_EQ(c.u, mpz_class(static_cast<unsigned long>(raw[2])));
    }
  }
}

TEST(BruteCountsTest, ClassicalIsKleeneSubtable) {
  for (int n = 1; n <= 6; ++n) {
    const auto restricted = oracle::tally_by_evaluate(n, Semantics::Kleene3, 2);
    const auto c = brute_counts(n, Semantics::Classical2);
    EXPECT_EQ(restricted[2], 0u);
    EXPECT_EQ(c.f, mpz_class(static_cast<unsigned long>(restricted[0])));
    EXPECT_EQ(c.t, mpz_class(static_cast<unsigned long>(restricted[1])));
  }
}

TEST(BruteCountsTest, ResultIndependentOfWorkerCount) {
  const auto one = brute_counts(7, Semantics::Kleene3, {}, 1);
  for (const unsigned workers : {2u, 3u, 7u, 64u}) {
    EXPECT_EQ(brute_counts(7, Semantics::Kleene3, {}, workers), one);
  }
}

TEST(BruteCountsTest, BudgetAndDomain) {
  EXPECT_THROW(brute_counts(9, Semantics::Kleene3), ResourceError);
  EXPECT_THROW(brute_counts(11, Semantics::Classical2), ResourceError);
  EXPECT_THROW(brute_counts(0, Semantics::Kleene3), DomainError);
  EXPECT_THROW(brute_counts(4, Semantics::Kleene3, BruteBudget{3, 3}),
               ResourceError);
  try {
    brute_counts(9, Semantics::Kleene3);
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("recurrence"), std::string::npos);
  }
}

TEST(TreeCountsTest, Examples) {
  const auto leaf = tree_counts(Bracketing::leaf(1), Semantics::Kleene3);
  EXPECT_EQ(leaf, (ValueCounts{1, 1, 1}));
  const auto p1p2 = tree_counts(enumerate_bracketings(2)[0], Semantics::Kleene3);
  EXPECT_EQ(p1p2, (ValueCounts{1, 5, 3}));  // indexed f, t, u

  // Per-tree brute-force tallies of the two n = 3 trees.
  const auto trees = enumerate_bracketings(3);
  for (const auto& tree : trees) {
    ValueCounts expected;
    Valuation v(3, TV::False);
    do {
      expected[to_int(evaluate(tree, v, Semantics::Kleene3))] += 1;
    } while (next_valuation(v, Semantics::Kleene3));
    EXPECT_EQ(tree_counts(tree, Semantics::Kleene3), expected)
        << tree.to_string();
  }
  const auto a = tree_counts(trees[0], Semantics::Kleene3);
  const auto b = tree_counts(trees[1], Semantics::Kleene3);
  EXPECT_EQ(a[1] + b[1], 30);
  EXPECT_EQ(a[0] + b[0], 6);
  EXPECT_EQ(a[2] + b[2], 18);
}

TEST(TreeCountsTest, SumOverTreesEqualsBruteForce) {
  for (const auto sem : {Semantics::Classical2, Semantics::Kleene3}) {
    for (int n = 1; n <= 7; ++n) {
      ValueCounts sum;
      for (const auto& tree : enumerate_bracketings(n)) {
        const auto c = tree_counts(tree, sem);
        for (int i = 0; i < 3; ++i) sum[i] += c[i];
      }
      EXPECT_EQ(CountVector::from_tallies(n, sem, sum), brute_counts(n, sem))
          << "n=" << n;
    }
  }
}

TEST(ColorClassTest, ClassicalFour) {
  const auto c = color_class_counts(4, Semantics::Classical2);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.at({TV::True, TV::True}), 33);
  EXPECT_EQ(c.at({TV::True, TV::False}), 19);
  EXPECT_EQ(c.at({TV::False, TV::True}), 19);
  EXPECT_EQ(c.at({TV::False, TV::False}), 9);
}

TEST(ColorClassTest, TwoVariables) {
  for (const auto& [cls, count] : color_class_counts(2, Semantics::Classical2)) {
    EXPECT_EQ(count, 1);
  }
  const auto k = color_class_counts(2, Semantics::Kleene3);
  EXPECT_EQ(k.size(), 9u);
  for (const auto& [cls, count] : k) EXPECT_EQ(count, 1);
}

TEST(ColorClassTest, ClassesPartitionAllEntries) {
  for (const auto sem : {Semantics::Classical2, Semantics::Kleene3}) {
    for (int n = 2; n <= 7; ++n) {
      mpz_class total = 0;
      for (const auto& [cls, count] : color_class_counts(n, sem)) total += count;
      EXPECT_EQ(total, brute_counts(n, sem).g);
    }
  }
}

TEST(ColorClassTest, RequiresRootSplit) {
  EXPECT_THROW(color_class_counts(1, Semantics::Classical2), DomainError);
  EXPECT_THROW(color_class_counts(9, Semantics::Kleene3), ResourceError);
}

}  // namespace
}  // namespace implcount
