#include <gtest/gtest.h>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/properties.hpp"
#include "support.hpp"

using namespace kdm;

namespace {
const VitaliUniverse U;

std::vector<SymbolicSet> sets() {
  std::vector<SymbolicSet> out = {witness(WitnessName::v, U.params()),
                                  witness(WitnessName::cv, U.params()),
                                  witness(WitnessName::a22, U.params())};
  for (const TameSet& t : kdm::testing::random_sets(300, 900)) out.push_back(SymbolicSet::tame(t));
  return out;
}
}  // namespace

TEST(Properties, DIdentitiesHold) {
  for (const PropertyResult& r : check_d_identities(sets(), U)) {
    EXPECT_EQ(r.violations, 0u) << r.id << " " << r.first_violation;
    EXPECT_GT(r.checked, 250u) << r.id;
  }
}

TEST(Properties, BaireIdentitiesHoldOnBaireSets) {
  for (const PropertyResult& r : check_baire_identities(sets(), U)) {
    EXPECT_EQ(r.violations, 0u) << r.id;
    EXPECT_EQ(r.checked, 300u) << r.id;
  }
}

TEST(Properties, BaireEqualitiesFailOnV) {
  const SymbolicSet v = witness(WitnessName::v, U.params());
  for (const OperatorEquality& e : baire_operator_equalities()) {
    EXPECT_FALSE(U.compare(SetRelation::equal, U.apply_word(std::string_view(e.lhs), v),
                           U.apply_word(std::string_view(e.rhs), v)))
        << e.lhs;
  }
}

TEST(Properties, SerialAndParallelKernelsAgree) {
  const auto s = sets();
  const auto a = check_d_identities(s, U);
  const auto b = check_d_identities_serial(s, U);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_EQ(a[n].checked, b[n].checked);
    EXPECT_EQ(a[n].skipped, b[n].skipped);
    EXPECT_EQ(a[n].violations, b[n].violations);
  }
  const auto c = check_baire_identities(s, U);
  const auto d = check_baire_identities_serial(s, U);
  for (std::size_t n = 0; n < c.size(); ++n) EXPECT_EQ(c[n].checked, d[n].checked);
}
