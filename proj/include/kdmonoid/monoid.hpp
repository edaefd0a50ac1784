#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kdmonoid/rewrite.hpp"
#include "kdmonoid/word.hpp"

namespace kdm {

struct MonoidTable {
  std::vector<Letter> generators;
  AxiomName axioms = AxiomName::base;
  // Canonical words in shortlex order; elements[0] is e.
  std::vector<Word> elements;
  // left_cayley[g][w] = index of g·w, right_cayley[g][w] = index of w·g,
  // with g indexing `generators`.
  std::vector<std::vector<std::size_t>> left_cayley;
  std::vector<std::vector<std::size_t>> right_cayley;

  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t size() const { return elements.size(); }
};

// Parses a generator string such as "kcd" into a sorted, de-duplicated set.
std::vector<Letter> parse_generators(std::string_view text);
std::string render_generators(const std::vector<Letter>& gens);

inline constexpr std::size_t kDefaultElementCap = 100'000;

// Canonical elements reachable from e by left multiplication, shortlex order.
std::vector<Word> enumerate_elements(const std::vector<Letter>& gens, const AxiomSystem& ax,
                                     std::size_t element_cap = kDefaultElementCap);

// Breadth-first closure of {e} under left multiplication by the generators.
// Throws NormalizeError on a stuck word and std::length_error past the cap.
MonoidTable enumerate(const std::vector<Letter>& gens, const AxiomSystem& ax,
                      std::size_t element_cap = kDefaultElementCap);

enum class Parity { even, odd };
std::string_view to_string(Parity p);

class ParityDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Number of c's mod 2 (i = ckc counts twice). Defined only on the f-free,
// constant-free fragment.
Parity parity(const Word& w);

}  // namespace kdm
