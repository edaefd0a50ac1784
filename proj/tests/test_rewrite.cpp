#include <gtest/gtest.h>

#include <random>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/monoid.hpp"
#include "kdmonoid/rewrite.hpp"
#include "kdmonoid/validate.hpp"
#include "support.hpp"

using namespace kdm;

namespace {
std::string nf(const char* w, AxiomName ax = AxiomName::base) {
  return render_word(normalize(parse_word(w), AxiomSystem::get(ax)));
}
}  // namespace

TEST(Rewrite, DocumentedReductions) {
  EXPECT_EQ(nf("kid"), "d");
  EXPECT_EQ(nf("kk"), "k");
  EXPECT_EQ(nf("cc"), "e");
  EXPECT_EQ(nf("kikik"), "kik");
  EXPECT_EQ(nf("dd"), "d");
  EXPECT_EQ(nf("dk"), "kik");
  EXPECT_EQ(nf("dc"), "dc");
  EXPECT_EQ(nf("dc", AxiomName::pb), "cid");
  EXPECT_EQ(nf("cdc", AxiomName::pb), "id");
  EXPECT_EQ(nf("fkik"), "fik");
  EXPECT_EQ(nf("fiki"), "fki");
  EXPECT_EQ(nf("ifk"), "0");
  EXPECT_EQ(nf("cifk"), "1");
  EXPECT_EQ(nf("ikic"), "ckik");
}

TEST(Rewrite, AxiomNames) {
  EXPECT_EQ(parse_axiom_name("zfc"), AxiomName::base);
  EXPECT_EQ(parse_axiom_name("ZF+DC+PB"), AxiomName::pb);
  EXPECT_THROW(parse_axiom_name("zfc2"), std::invalid_argument);
}

TEST(Rewrite, NormalFormsAreIrreducibleAndIdempotent) {
  std::mt19937_64 rng(11);
  for (const auto ax : {AxiomName::base, AxiomName::pb}) {
    const AxiomSystem& sys = AxiomSystem::get(ax);
    for (int n = 0; n < 2000; ++n) {
      const std::string w = kdm::testing::random_tokens(rng, 10);
      const Word once = normalize_tokens(w, sys);
      ASSERT_TRUE(is_irreducible(once.tokens(), sys)) << w;
      ASSERT_EQ(normalize(once, sys), once) << w;
    }
  }
}

TEST(Rewrite, NormalFormsLandInTheMonoid) {
  std::mt19937_64 rng(12);
  const auto elements = enumerate_elements(parse_generators("kcfd"), AxiomSystem::base());
  const std::set<Word, ShortlexLess> members(elements.begin(), elements.end());
  for (int n = 0; n < 3000; ++n) {
    ASSERT_TRUE(members.contains(normalize_tokens(kdm::testing::random_tokens(rng, 12),
                                                  AxiomSystem::base())));
  }
}

TEST(Rewrite, TraceRecordsSteps) {
  std::vector<RewriteStep> steps;
  const Word w = normalize_tokens("kid", AxiomSystem::base(), kDefaultStepBudget, &steps);
  EXPECT_EQ(render_word(w), "d");
  ASSERT_FALSE(steps.empty());
  EXPECT_EQ(steps.back().result, "d");
}

TEST(Rewrite, BudgetExhaustionIsAnError) {
  EXPECT_THROW((void)normalize_tokens("kkkkkkkkkkkk", AxiomSystem::base(), 2), NormalizeError);
}

TEST(Rewrite, InferredKindsAreSound) {
  // Whatever kind infer_kind claims must hold on every tame corpus set.
  const VitaliUniverse u;
  const auto sets = kdm::testing::random_sets(150, 300);
  const auto elements = enumerate_elements(parse_generators("kcfd"), AxiomSystem::base());
  for (const Word& w : elements) {
    const OutputKind kind = infer_kind(w);
    for (const TameSet& s : sets) {
      const TameSet x = u.apply_word(w, SymbolicSet::tame(s)).base;
      const TameSet k = tame_closure(x), i = tame_interior(x);
      if (is_closed_kind(kind)) ASSERT_EQ(k, x) << render_word(w);
      if (is_open_kind(kind)) ASSERT_EQ(i, x) << render_word(w);
      if (is_regular_closed_kind(kind)) ASSERT_EQ(tame_closure(i), x) << render_word(w);
      if (is_regular_open_kind(kind)) ASSERT_EQ(tame_interior(k), x) << render_word(w);
      if (is_nwd_closed_kind(kind)) ASSERT_TRUE(tame_interior(k).empty()) << render_word(w);
      if (is_dense_open_kind(kind)) ASSERT_TRUE(tame_closure(x).is_real_line()) << render_word(w);
    }
  }
}

TEST(Rewrite, CompletionFailsWhenDckRuleAndSchemaAreRemoved) {
  const VitaliUniverse u;
  const Corpus c = build_corpus(kDefaultSeed, 100, u.params());
  const LabeledCorpus probes = kdm::testing::labeled(c);
  const AxiomSystem broken = AxiomSystem::base().without_rule("dck").without_schema("G3");
  EXPECT_EQ(render_word(normalize(parse_word("dck"), broken)), "dck");
  const CompletionReport r = completion_check(broken, parse_generators("kcd"), probes, u);
  EXPECT_FALSE(r.closed);
  EXPECT_EQ(r.failing_word, "dck");

  // Removing only the rule is not enough: the schema still reduces dck.
  const AxiomSystem partial = AxiomSystem::base().without_rule("dck");
  EXPECT_TRUE(completion_check(partial, parse_generators("kcd"), probes, u).closed);
}
