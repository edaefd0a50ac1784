#include <gtest/gtest.h>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/monoid.hpp"
#include "kdmonoid/validate.hpp"
#include "support.hpp"

using namespace kdm;

namespace {
const VitaliUniverse U;
const LabeledCorpus& corpus() {
  static const LabeledCorpus c = kdm::testing::labeled(build_corpus(kDefaultSeed, 300, U.params()));
  return c;
}
}  // namespace

TEST(Validate, ShippedRulesHold) {
  const auto report = validate_rules(AxiomSystem::pb().rules(), corpus(), U);
  for (const RuleValidation& r : report.rules) {
    EXPECT_TRUE(r.passed) << r.rule.lhs << " -> " << r.rule.rhs;
  }
}

TEST(Validate, PbRuleIsSkippedOutsideBaireSets) {
  const RewriteRule dc{"dc", "cid", Tier::pb, RuleStatus::stated, ""};
  const auto r = validate_rules_serial(std::vector<RewriteRule>{dc}, corpus(), U).rules[0];
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.not_applicable, 3u);  // V, cV, A22

  RewriteRule as_base = dc;
  as_base.tier = Tier::base;
  const auto f = validate_rules_serial(std::vector<RewriteRule>{as_base}, corpus(), U).rules[0];
  EXPECT_FALSE(f.passed);
}

TEST(Validate, PrintedFrontierFormsFail) {
  const LabeledCorpus probe{{SymbolicSet::tame(frontier_probe())}, {"probe"}};
  const std::vector<RewriteRule> rules = {{"fkik", "fki", Tier::base, RuleStatus::stated, ""},
                                          {"fiki", "fik", Tier::base, RuleStatus::stated, ""}};
  const auto report = validate_rules_serial(rules, probe, U);
  ASSERT_EQ(report.failures(), 2u);
  EXPECT_EQ(report.rules[0].counterexample->lhs_image, "{0} u {2}");
  EXPECT_EQ(report.rules[0].counterexample->rhs_image, "{0} u {1}");
  EXPECT_EQ(report.rules[0].counterexample->set, "(0,1) u Q(1,2)");
}

TEST(Validate, SerialAndParallelKernelsAgree) {
  const auto instances = instantiate_schemas(
      AxiomSystem::base(), enumerate_elements(parse_generators("kcd"), AxiomSystem::base()));
  const auto a = validate_rules(instances, corpus(), U);
  const auto b = validate_rules_serial(instances, corpus(), U);
  ASSERT_EQ(a.rules.size(), b.rules.size());
  for (std::size_t n = 0; n < a.rules.size(); ++n) {
    EXPECT_EQ(a.rules[n].rule.lhs, b.rules[n].rule.lhs);
    EXPECT_EQ(a.rules[n].passed, b.rules[n].passed);
    EXPECT_EQ(a.rules[n].checked, b.rules[n].checked);
    EXPECT_EQ(a.rules[n].unvalidated, b.rules[n].unvalidated);
  }
  EXPECT_TRUE(a.all_passed());
}

TEST(Validate, SchemaInstancesRespectGuards) {
  const std::vector<Word> suffixes = {parse_word("i"), parse_word("k"), parse_word("c")};
  for (const RewriteRule& r : instantiate_schemas(AxiomSystem::base(), suffixes)) {
    EXPECT_NE(r.lhs, "kc") << "k applied to a non-closed suffix";
  }
}

TEST(Validate, CompletionSucceedsOnShippedSystems) {
  for (const auto ax : {AxiomName::base, AxiomName::pb}) {
    const auto r = completion_check(AxiomSystem::get(ax), parse_generators("kcfd"), corpus(), U);
    EXPECT_TRUE(r.closed) << r.reason;
  }
}

TEST(Validate, CompletionDetectsMissingReduction) {
  // Without kid -> d nothing reduces kid, but it agrees with d on every probe.
  const auto r = completion_check(AxiomSystem::base().without_rule("kid"), parse_generators("kid"),
                                  corpus(), U);
  EXPECT_FALSE(r.closed);
  EXPECT_EQ(r.failing_word, "kid");
}
