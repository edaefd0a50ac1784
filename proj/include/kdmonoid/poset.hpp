#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdmonoid/rewrite.hpp"
#include "kdmonoid/validate.hpp"
#include "kdmonoid/vitali.hpp"
#include "kdmonoid/word.hpp"

namespace kdm {

enum class Provenance : std::uint8_t { none, proved_chain, corpus_only };
std::string_view to_string(Provenance p);

// o1 <= o2 iff o1 A ⊆ o2 A for every set A.
struct OrderRelation {
  std::vector<Word> elements;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<Provenance>> provenance;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Word& w) const;
  bool le(const Word& a, const Word& b) const;
  bool same_matrix(const OrderRelation& other) const { return leq == other.leq; }
};

struct Inequality {
  Word lesser;
  Word greater;
};

// i <= e <= k together with the six relations among even KD operators.
std::vector<Inequality> generator_inequalities();

// Closure of the generator inequalities under transitivity, monotone left
// composition by k, i, d, order reversal under left c, and right composition
// by any word. Throws std::invalid_argument for a non-canonical element.
OrderRelation proved_relation(const std::vector<Word>& elements, const AxiomSystem& ax);

struct CorpusRelationStats {
  std::size_t skipped = 0;  // (pair, set) comparisons that were undecidable
};

// leq(a, b) iff a S ⊆ b S on every corpus set where the comparison is decidable.
OrderRelation corpus_relation(const std::vector<Word>& elements, const LabeledCorpus& corpus,
                              const VitaliUniverse& universe,
                              CorpusRelationStats* stats = nullptr);
OrderRelation corpus_relation_serial(const std::vector<Word>& elements,
                                     const LabeledCorpus& corpus, const VitaliUniverse& universe,
                                     CorpusRelationStats* stats = nullptr);

// Corpus relation annotated with which entries are also proved.
OrderRelation reconcile(const OrderRelation& proved, const OrderRelation& corpus);

struct HasseEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

// Transitive reduction; throws std::logic_error if the relation has a cycle.
std::vector<HasseEdge> hasse(const OrderRelation& r);

std::string emit_dot(const std::vector<HasseEdge>& edges, const std::vector<std::string>& labels);

// Even elements of the monoid generated by k, c, d under ax.
std::vector<Word> even_operators(const AxiomSystem& ax);

}  // namespace kdm
