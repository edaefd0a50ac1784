#include <gtest/gtest.h>

#include "kdmonoid/tables.hpp"
#include "kdmonoid/verify.hpp"

using namespace kdm;

TEST(Tables, FigureRowsMatch) {
  const auto rows = figure_even_table(VitaliUniverse());
  ASSERT_EQ(rows.size(), 9u);
  for (const TableRow& r : rows) EXPECT_TRUE(r.matches) << render_word(r.word) << " " << r.derived;
}

TEST(Tables, VitaliRowsFlagTwoMismatches) {
  const auto rows = vitali_table(VitaliUniverse());
  ASSERT_EQ(rows.size(), 8u);
  std::vector<std::string> bad;
  for (const TableRow& r : rows) {
    if (!r.matches) bad.push_back(render_word(r.word));
  }
  EXPECT_EQ(bad, (std::vector<std::string>{"cd", "kcd"}));
  EXPECT_NE(format_table(rows, "V").find("MISMATCH"), std::string::npos);
}

TEST(Tables, KfdCounts) {
  const auto rows = kfd_counts();
  ASSERT_EQ(rows.size(), 3u);
  for (const CountRow& r : rows) EXPECT_EQ(r.count, r.expected) << r.generators << " " << r.axioms;
}

TEST(Verify, SmallRunIsDeterministicAndLedgerHasFiveEntries) {
  VerifyOptions opt;
  opt.corpus_size = 60;
  opt.random_pairs = 50;
  const VerifyReport a = run_verify(opt);
  const VerifyReport b = run_verify(opt);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.typo_ledger.size(), 5u);
  EXPECT_NE(a.to_json().find("\"version\": 1"), std::string::npos);
  for (int c = 1; c <= kCriteriaCount; ++c) EXPECT_FALSE(a.checks_for(c).empty()) << c;
}
