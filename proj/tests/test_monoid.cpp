#include <gtest/gtest.h>

#include "kdmonoid/monoid.hpp"

using namespace kdm;

namespace {
std::size_t count(const char* gens, AxiomName ax) {
  return enumerate_elements(parse_generators(gens), AxiomSystem::get(ax)).size();
}
}  // namespace

TEST(Monoid, Cardinalities) {
  EXPECT_EQ(count("kc", AxiomName::base), 14u);
  EXPECT_EQ(count("kcd", AxiomName::base), 22u);
  EXPECT_EQ(count("kcd", AxiomName::pb), 18u);
  EXPECT_EQ(count("ki", AxiomName::base), 7u);
  EXPECT_EQ(count("kid", AxiomName::base), 9u);
  EXPECT_EQ(count("kcf", AxiomName::base), 34u);
  EXPECT_EQ(count("kifd", AxiomName::base), 20u);
  EXPECT_EQ(count("kcfd", AxiomName::pb), 40u);
  EXPECT_EQ(count("kcfd", AxiomName::base), 46u);
  EXPECT_EQ(count("c", AxiomName::base), 2u);
}

TEST(Monoid, KuratowskiFourteen) {
  const auto els = enumerate_elements(parse_generators("kc"), AxiomSystem::base());
  std::string all;
  for (const Word& w : els) all += render_word(w) + " ";
  EXPECT_EQ(all, "e c i k ci ck ik ki cik cki iki kik ciki ckik ");
}

TEST(Monoid, CayleyTablesAreConsistent) {
  const AxiomSystem& ax = AxiomSystem::base();
  const MonoidTable m = enumerate(parse_generators("kcd"), ax);
  ASSERT_EQ(m.elements[0], Word::identity());
  for (std::size_t g = 0; g < m.generators.size(); ++g) {
    const std::string letter(1, to_char(m.generators[g]));
    for (std::size_t w = 0; w < m.size(); ++w) {
      EXPECT_EQ(m.elements[m.left_cayley[g][w]], normalize_tokens(letter + m.elements[w].tokens(), ax));
      EXPECT_EQ(m.elements[m.right_cayley[g][w]], normalize_tokens(m.elements[w].tokens() + letter, ax));
    }
  }
}

TEST(Monoid, GeneratorsAreSortedAndDeduplicated) {
  EXPECT_EQ(render_generators(parse_generators("kdck")), render_generators(parse_generators("cdk")));
  EXPECT_THROW(parse_generators("kx"), std::invalid_argument);
}

TEST(Monoid, ElementCapIsEnforced) {
  EXPECT_THROW(enumerate(parse_generators("kcd"), AxiomSystem::base(), 5), std::length_error);
}

TEST(Monoid, Parity) {
  EXPECT_EQ(parity(parse_word("cdc")), Parity::even);
  EXPECT_EQ(parity(parse_word("i")), Parity::even);
  EXPECT_EQ(parity(parse_word("cid")), Parity::odd);
  EXPECT_THROW(parity(parse_word("fk")), ParityDomainError);
  EXPECT_THROW(parity(Word::zero()), ParityDomainError);

  for (const auto ax : {AxiomName::base, AxiomName::pb}) {
    std::size_t even = 0;
    const auto els = enumerate_elements(parse_generators("kcd"), AxiomSystem::get(ax));
    for (const Word& w : els) even += parity(w) == Parity::even;
    EXPECT_EQ(2 * even, els.size());
  }
}
