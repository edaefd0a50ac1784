#include <gtest/gtest.h>

#include "kdmonoid/corpus.hpp"
#include "support.hpp"

using namespace kdm;
using kdm::testing::random_sets;

namespace {
TameSet t(const char* dsl) { return parse_tame_dsl(dsl); }
const auto kSets = random_sets(400);
}  // namespace

TEST(TameSet, EmptyAndRealLine) {
  EXPECT_TRUE(TameSet().empty());
  EXPECT_TRUE(TameSet::real_line().is_real_line());
  EXPECT_EQ(render(TameSet()), "{}");
  EXPECT_EQ(render(TameSet::real_line()), "(-inf,inf)");
  EXPECT_EQ(tame_complement(TameSet()), TameSet::real_line());
}

TEST(TameSet, NormalizationMergesAdjacentCells) {
  EXPECT_EQ(t("(1,2) u [2,3)"), t("(1,3)"));
  EXPECT_EQ(t("Q(0,1) u {1} u Q(1,2)"), t("Q(0,2)"));
  EXPECT_EQ(t("Q(0,1) u I(0,1)"), t("(0,1)"));
  EXPECT_NE(t("(1,2) u (2,3)"), t("(1,3)"));
  EXPECT_EQ(t("(1,1)"), TameSet());
  EXPECT_EQ(t("[1,1]"), t("{1}"));
}

TEST(TameSet, Membership) {
  const TameSet a = a18();
  EXPECT_FALSE(a.contains(Rational(2)));
  EXPECT_TRUE(a.contains(Rational(3, 2)));
  EXPECT_TRUE(a.contains(Rational(4)));
  EXPECT_TRUE(a.contains(Rational(11, 2)));   // rational in Q(5,6)
  EXPECT_FALSE(a.contains(Rational(13, 2)));  // rational in I(6,7)
}

TEST(TameSet, OperatorsOnA18) {
  const TameSet a = a18();
  EXPECT_EQ(render(tame_closure(a)), "[1,3] u {4} u [5,7]");
  EXPECT_EQ(render(tame_interior(a)), "(1,2) u (2,3)");
  EXPECT_EQ(render(tame_second_category(a)), "[1,3] u [6,7]");
  EXPECT_EQ(render(tame_frontier(t("(0,1) u Q(1,2)"))), "{0} u [1,2]");
}

TEST(TameSet, ClosureMatchesCellwiseReference) {
  for (const TameSet& s : kSets) {
    ASSERT_EQ(tame_closure(s), kdm::testing::closure_by_cells(s)) << render(s);
  }
}

TEST(TameSet, SecondCategoryMatchesCellwiseReference) {
  for (const TameSet& s : kSets) {
    ASSERT_EQ(tame_second_category(s), kdm::testing::d_by_cells(s)) << render(s);
  }
}

TEST(TameSet, InteriorMatchesPointwiseReference) {
  for (const TameSet& s : kSets) {
    ASSERT_EQ(tame_interior(s), kdm::testing::interior_by_samples(s)) << render(s);
  }
}

TEST(TameSet, KuratowskiAxioms) {
  for (const TameSet& s : kSets) {
    const TameSet k = tame_closure(s);
    ASSERT_EQ(tame_closure(k), k);
    ASSERT_TRUE(tame_compare(SetRelation::subset, s, k));
    ASSERT_EQ(tame_complement(tame_complement(s)), s);
    ASSERT_EQ(tame_interior(s), tame_complement(tame_closure(tame_complement(s))));
    ASSERT_EQ(tame_frontier(s),
              tame_combine(SetOp::intersect, k, tame_closure(tame_complement(s))));
    ASSERT_TRUE(is_closed(k));
    ASSERT_TRUE(is_open(tame_interior(s)));
  }
}

TEST(TameSet, ClosureIsAdditive) {
  for (std::size_t n = 0; n + 1 < kSets.size(); ++n) {
    const TameSet u = tame_combine(SetOp::union_, kSets[n], kSets[n + 1]);
    ASSERT_EQ(tame_closure(u), tame_combine(SetOp::union_, tame_closure(kSets[n]),
                                            tame_closure(kSets[n + 1])));
  }
}

TEST(TameSet, BooleanAlgebraLaws) {
  for (std::size_t n = 0; n + 1 < kSets.size(); ++n) {
    const TameSet& a = kSets[n];
    const TameSet& b = kSets[n + 1];
    const TameSet diff = tame_combine(SetOp::difference, a, b);
    ASSERT_EQ(diff, tame_combine(SetOp::intersect, a, tame_complement(b)));
    ASSERT_EQ(tame_complement(tame_combine(SetOp::union_, a, b)),
              tame_combine(SetOp::intersect, tame_complement(a), tame_complement(b)));
    ASSERT_EQ(tame_compare(SetRelation::subset, a, b), tame_combine(SetOp::difference, a, b).empty());
  }
}

TEST(TameSet, RenderParseRoundTrip) {
  for (const TameSet& s : kSets) ASSERT_EQ(parse_tame_dsl(render(s)), s) << render(s);
}

TEST(TameSet, CellsRebuildTheSet) {
  for (const TameSet& s : kSets) ASSERT_EQ(TameSet::from_cells(s.cells()), s);
}

TEST(TameSet, SyntacticMeagerness) {
  EXPECT_TRUE(is_syntactically_meager(t("Q(0,1) u {3}")));
  EXPECT_FALSE(is_syntactically_meager(t("I(0,1)")));
  EXPECT_TRUE(is_syntactically_meager(TameSet()));
}

TEST(TameSet, RejectsMalformedCells) {
  EXPECT_THROW(Cell::interval(Rational(2), Rational(1), false, false).validate(), std::invalid_argument);
  EXPECT_THROW(Cell::interval(std::nullopt, Rational(1), true, false).validate(), std::invalid_argument);
}
