#include <gtest/gtest.h>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/vitali.hpp"

using namespace kdm;

namespace {
const VitaliUniverse U;
SymbolicSet V() { return witness(WitnessName::v, U.params()); }
std::string ev(const char* w, const SymbolicSet& s) {
  return U.render(U.apply_word(std::string_view(w), s));
}
SymbolicSet S(const char* dsl) { return parse_set_dsl(dsl, U); }
}  // namespace

TEST(Vitali, ParamsValidation) {
  EXPECT_NO_THROW(VitaliParams::make(parse_tame_dsl("(0,1)"), parse_tame_dsl("(0,2)")));
  EXPECT_THROW(VitaliParams::make(TameSet(), parse_tame_dsl("(0,2)")), std::invalid_argument);
  EXPECT_THROW(VitaliParams::make(parse_tame_dsl("(0,3)"), parse_tame_dsl("(0,2)")),
               std::invalid_argument);
  EXPECT_THROW(VitaliParams::make(parse_tame_dsl("[0,1]"), parse_tame_dsl("(-1,2)")),
               std::invalid_argument);
}

TEST(Vitali, DefaultRows) {
  EXPECT_EQ(ev("d", V()), "[8,9]");
  EXPECT_EQ(ev("k", V()), "[8,10]");
  EXPECT_EQ(ev("i", V()), "{}");
  EXPECT_EQ(ev("id", V()), "(8,9)");
  EXPECT_EQ(ev("idc", V()), "(-inf,inf)");
  EXPECT_EQ(ev("dc", V()), "(-inf,inf)");
  EXPECT_EQ(ev("cd", V()), "(-inf,8) u (9,inf)");
  EXPECT_EQ(ev("cdc", V()), "{}");
  EXPECT_EQ(ev("cidc", V()), "{}");
  EXPECT_EQ(ev("kcd", V()), "(-inf,8] u [9,inf)");
  EXPECT_EQ(ev("f", V()), "[8,10]");
}

TEST(Vitali, ComplementRoundTrip) {
  const SymbolicSet cv = U.apply(Letter::c, V());
  EXPECT_EQ(cv.mode, VitaliMode::minus_v);
  EXPECT_TRUE(U.compare(SetRelation::equal, U.apply(Letter::c, cv), V()));
  EXPECT_EQ(U.render(V()), "V");
}

TEST(Vitali, BaireProperty) {
  EXPECT_EQ(U.has_baire_property(V()), BaireProperty::no);
  EXPECT_EQ(U.has_baire_property(witness(WitnessName::cv, U.params())), BaireProperty::no);
  EXPECT_EQ(U.has_baire_property(witness(WitnessName::a22, U.params())), BaireProperty::no);
  EXPECT_EQ(U.has_baire_property(SymbolicSet::tame(a18())), BaireProperty::yes);
  // V hidden inside a full interval is harmless.
  EXPECT_EQ(U.has_baire_property(S("(7,11) u V")), BaireProperty::yes);
  EXPECT_FALSE(U.is_meager(V()));
}

TEST(Vitali, CanonicalAbsorbsV) {
  EXPECT_TRUE(S("(7,11) u V").is_tame());
  EXPECT_TRUE(S("(20,21) \\ V").is_tame());
}

TEST(Vitali, ThreeValuedComparison) {
  EXPECT_TRUE(U.compare(SetRelation::subset, V(), S("(8,10)")));
  EXPECT_FALSE(U.compare(SetRelation::subset, S("(8,10)"), V()));
  EXPECT_FALSE(U.compare(SetRelation::equal, V(), SymbolicSet::tame(TameSet())));
  EXPECT_THROW((void)U.compare(SetRelation::subset, S("{9}"), V()), UndecidableError);
  EXPECT_THROW((void)U.combine(SetOp::intersect, V(), S("{9}")), UndecidableError);
}

TEST(Vitali, UndecidableClosureNamesThePoint) {
  try {
    (void)U.apply(Letter::k, S("{9} u (20,21) \\ V"));
    FAIL() << "expected UndecidableError";
  } catch (const UndecidableError& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
}

TEST(Vitali, DistinguishCountsGroups) {
  const auto ops = std::vector<Word>{parse_word("e"), parse_word("d"), parse_word("kid"),
                                     parse_word("k")};
  const Distinction d = U.distinguish(SymbolicSet::tame(a18()), ops);
  EXPECT_EQ(d.count, 3u);
  EXPECT_EQ(d.rows[2].group, 1u);
}

TEST(Vitali, CustomParams) {
  const VitaliUniverse u(VitaliParams::make(parse_tame_dsl("(0,1) u (2,3)"),
                                            parse_tame_dsl("(0,4)")));
  const SymbolicSet v = witness(WitnessName::v, u.params());
  EXPECT_EQ(u.render(u.apply_word(std::string_view("d"), v)), "[0,1] u [2,3]");
  EXPECT_EQ(u.render(u.apply_word(std::string_view("k"), v)), "[0,4]");
}
