#include <gtest/gtest.h>

#include "kdmonoid/corpus.hpp"

using namespace kdm;

namespace {
const VitaliUniverse U;

std::size_t parse_error_position(const char* text) {
  try {
    (void)parse_set_dsl(text, U);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}
}  // namespace

TEST(Corpus, A18FromDsl) {
  const SymbolicSet s = parse_set_dsl("(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)", U);
  EXPECT_EQ(s, SymbolicSet::tame(a18()));
  EXPECT_EQ(a18().cells().size(), 5u);
}

TEST(Corpus, VitaliTerms) {
  EXPECT_EQ(parse_set_dsl("V", U), SymbolicSet::plus_v(TameSet()));
  EXPECT_EQ(parse_set_dsl("(1,2) u (2,3) u {4} u Q(5,6) u I(6,7) u V", U),
            witness(WitnessName::a22, U.params()));
  EXPECT_EQ(parse_set_dsl("(-inf,inf) \\ V", U), witness(WitnessName::cv, U.params()));
  EXPECT_EQ(parse_set_dsl("(-inf,inf) ∖ V", U), witness(WitnessName::cv, U.params()));
}

TEST(Corpus, Numbers) {
  EXPECT_EQ(parse_tame_dsl("[1/2, 0.75]"), parse_tame_dsl("[2/4,3/4]"));
  EXPECT_EQ(parse_tame_dsl("(-inf, -3)"), parse_tame_dsl("(-inf,-3)"));
  EXPECT_EQ(render(parse_tame_dsl("{-7/3}")), "{-7/3}");
  EXPECT_EQ(parse_tame_dsl("{010}"), parse_tame_dsl("{10}"));
  EXPECT_EQ(parse_tame_dsl("{0.05}"), parse_tame_dsl("{1/20}"));
}

TEST(Corpus, RejectsMalformedInput) {
  EXPECT_THROW(parse_set_dsl("[2,1]", U), ParseError);
  EXPECT_THROW(parse_set_dsl("V u V", U), ParseError);
  EXPECT_THROW(parse_set_dsl("[-inf,1)", U), ParseError);
  EXPECT_THROW(parse_set_dsl("I[0,1)", U), ParseError);
  EXPECT_THROW(parse_set_dsl("", U), ParseError);
  EXPECT_THROW(parse_set_dsl("(0,1) (2,3)", U), ParseError);
  EXPECT_THROW(parse_set_dsl("{1/0}", U), ParseError);
  EXPECT_THROW(parse_tame_dsl("V"), ParseError);
  EXPECT_EQ(parse_error_position("(0,1) u x"), 9u);
}

TEST(Corpus, NamedWitnessesRoundTrip) {
  for (auto name : {WitnessName::a18, WitnessName::a22, WitnessName::v, WitnessName::cv,
                    WitnessName::empty, WitnessName::full}) {
    const SymbolicSet s = witness(name, U.params());
    EXPECT_EQ(parse_set_dsl(U.render(s), U), s) << to_string(name);
    EXPECT_EQ(parse_witness_name(to_string(name)), name);
  }
  EXPECT_THROW(parse_witness_name("A19"), std::invalid_argument);
}

TEST(Corpus, RandomSetsAreDeterministicAndBounded) {
  std::size_t distinct = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TameSet a = random_tame(seed, 4);
    EXPECT_EQ(a, random_tame(seed, 4));
    EXPECT_LE(a.cells().size(), 4u);
    EXPECT_EQ(parse_tame_dsl(render(a)), a);
    distinct += !(a == random_tame(seed + 1, 4));
  }
  EXPECT_GT(distinct, 90u);
  EXPECT_THROW(random_tame(1, 0), std::invalid_argument);
}

TEST(Corpus, BuildCorpusLayout) {
  const Corpus c = build_corpus(5, 10, U.params());
  EXPECT_EQ(c.all().size(), c.named.size() + 10);
  EXPECT_EQ(c.labels()[c.named.size()], "random#5");
  EXPECT_EQ(c.random[3], random_tame(8, kRandomCellBound));
}
